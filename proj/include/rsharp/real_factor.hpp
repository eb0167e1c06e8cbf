#pragma once

#include "rsharp/bivar_poly.hpp"
#include "rsharp/univar_poly.hpp"

#include <optional>
#include <vector>

namespace rsharp {

// phi = z1^nu1 * z2^nu2 * z1^{rL} * p(z2^s / z1^r)
struct AssociatedUnivariate {
    long r = 1, s = 1;
    int nu1 = 0, nu2 = 0;
    int L = 0;
    UnivarPoly p;  // p(0) != 0, deg p = L
};

AssociatedUnivariate associated_univariate(const BivarPoly& phi, long r, long s);

struct CurveFactor {
    RealRoot lambda;  // factor z2^s - lambda*z1^r, lambda != 0
    int mult = 0;
};

struct FactorDecomposition {
    long r = 1, s = 1;
    Rational constant;  // leading coefficient of p
    int nu1 = 0, nu2 = 0;
    std::vector<CurveFactor> real;
    int complex_mult_sum = 0;  // sum of multiplicities of nonreal roots of p
    int complex_pair_max = 0;  // largest multiplicity of a nonreal conjugate pair
    AssociatedUnivariate assoc;
    std::vector<std::pair<UnivarPoly, int>> layers;  // squarefree decomposition of p

    // Multiplicity of the curve z2^s - lambda*z1^r (0 if absent).
    int multiplicity_of(const RealRoot& lambda) const;
    int max_real_multiplicity() const;  // axes included
};

FactorDecomposition factor_decomposition(const BivarPoly& phi, long r, long s);

// Maximum multiplicity of a real irreducible factor.
int max_irreducible_multiplicity(const FactorDecomposition& fd);

bool is_homogeneous(const BivarPoly& phi);

// Newton distance of the support of phi.
Rational newton_distance_of(const BivarPoly& phi);

// Homogeneous phi: every factor z2 - lambda*z1 with lambda != 0 has multiplicity <= d(phi).
bool is_linearly_adapted(const BivarPoly& phi);

struct Adaptation {
    BivarPoly adapted;
    std::optional<Rational> shear;  // adapted(z1, z2) = phi(z1, z2 + shear*z1)
};

// Throws IrrationalAdaptationRoot when the heavy factor has an irrational root.
Adaptation linearly_adapt(const BivarPoly& phi);

}  // namespace rsharp
