#pragma once

#include "rsharp/bivar_poly.hpp"

#include <optional>
#include <vector>

namespace rsharp {

// Vertices of the compact boundary of conv(S + R_+^2), alpha1 increasing, alpha2 decreasing.
std::vector<Exponent> newton_chain(std::vector<Exponent> support);

// Where the bisectrix meets the boundary of the Newton polyhedron.
Rational newton_distance(const std::vector<Exponent>& support);

// Distance of the polyhedron built from support points with alpha_var != 0.
std::optional<Rational> reduced_distance(const std::vector<Exponent>& support, int var);

struct NewtonData {
    std::vector<Exponent> chain;
    Rational d;
    std::optional<Rational> d_R1, d_R2;
    Rational d_R;
    int reduced_select = 1;  // which reduced polyhedron attains d_R (1 on ties)
};

// Throws NotMixedHomogeneous if both reduced supports are empty.
NewtonData newton_data(const BivarPoly& phi);

}  // namespace rsharp
