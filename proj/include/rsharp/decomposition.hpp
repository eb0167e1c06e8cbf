#pragma once

#include "rsharp/classifier.hpp"

#include <string>
#include <vector>

namespace rsharp {

enum class RegionKind { Complement, Curve, AxisZ2, AxisZ1 };

struct RegionSpec {
    int index = 0;  // 0 is the complement region
    RegionKind kind = RegionKind::Complement;
    double lambda = 0.0;  // Curve: |z2^s - lambda*z1^r| < eps*|z1|^r
    int mult = 0;         // multiplicity of the factor in omega
    std::string label;
};

struct Decomposition {
    long r = 1, s = 1;
    Rational eps_tilde;
    std::vector<RegionSpec> regions;  // regions[0] is the complement
    int heavy_index = -1;             // region of the heavy factor, if any

    // Membership in the extended region (no clipping to the unit square).
    bool in_extended(const RegionSpec& spec, double z1, double z2) const;
    bool contains(const RegionSpec& spec, double z1, double z2, bool extended = false) const;
    // Index of the region containing z (first match; 0 if none of the factor regions).
    int locate(double z1, double z2) const;
};

// Factor regions of omega. ExcludedZero/power cases and constant omega have only the complement.
Decomposition decompose(const SurfaceInvariants& inv);
Decomposition decompose(const FactorDecomposition& omega_factors, const Rational& eps_tilde);

// Largest power of 1/2 not above 1/16 that separates the factor regions on a 100x100 probe grid.
Rational choose_eps_tilde(const FactorDecomposition& omega_factors);

}  // namespace rsharp
