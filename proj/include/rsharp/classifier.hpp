#pragma once

#include "rsharp/bivar_poly.hpp"
#include "rsharp/real_factor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rsharp {

enum class CaseLabel {
    CaseNu,
    CaseA,
    CaseN,
    TwistedI,
    TwistedIIa,
    TwistedIIb,
    Degenerate,
    ExcludedZero,
    ExcludedMonomialPower,
    ExcludedLinearPower,
};

bool is_rectangular(CaseLabel c);
bool is_twisted(CaseLabel c);
bool is_excluded(CaseLabel c);

enum class FactorKind { None, AxisZ1, AxisZ2, Curve };

struct HeavyFactor {
    FactorKind kind = FactorKind::None;
    RealRoot lambda;  // Curve only: z2^s - lambda*z1^r
    bool linear = false;
};

struct SurfaceInvariants {
    BivarPoly phi;
    BivarPoly omega;
    CaseLabel label = CaseLabel::Degenerate;
    int excluded_power = 0;  // J for the excluded power labels
    std::optional<MixedWeight> weight;
    Rational d_h;
    Rational d_omega;
    std::optional<FactorDecomposition> phi_factors;
    std::optional<FactorDecomposition> omega_factors;
    int T = 0;
    HeavyFactor fT;
    int nu = 0, A = 0, N = 0, J = 0;
    long Q = 0;
    bool adaptation_pending = false;
};

std::string case_label_name(const SurfaceInvariants& inv);
std::string case_label_name(CaseLabel c);

// phi(0) = 0 and grad phi(0) = 0, else HypothesisViolation.
void check_hypotheses(const BivarPoly& phi);

SurfaceInvariants classify(const BivarPoly& phi);

// phi rewritten so that the heavy factor is z2 (axis or line) or z2 - lambda*z1^r.
struct OrientedSurface {
    BivarPoly phi;
    bool swapped = false;
    std::optional<Rational> shear;  // applied after the swap
    bool curve = false;
    long r = 1;
    double lambda = 0.0;
    std::optional<Rational> lambda_exact;
};

OrientedSurface orient_heavy_factor(const SurfaceInvariants& inv);

struct CheckResult {
    std::string name;
    bool applicable = false;
    bool passed = true;
    std::string detail;
};

// Exact symbolic identities relating phi, its derivatives and omega.
std::vector<CheckResult> symbolic_checks(const SurfaceInvariants& inv);

// phi == c*(a*z1 + b*z2)^J for some real a, b, c.
bool is_linear_form_power(const BivarPoly& phi);

}  // namespace rsharp
