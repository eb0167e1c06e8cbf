#pragma once

#include "rsharp/classifier.hpp"
#include "rsharp/decomposition.hpp"
#include "rsharp/numeric/monte_carlo.hpp"
#include "rsharp/numeric/slope_fit.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsharp::numeric {

enum class Condition { QGeP, QLe3P, ScalingLine, CaseNu, CaseN1OverN, CaseNSlope, CaseASlope };

const std::vector<Condition>& all_conditions();
std::string condition_name(Condition c);
std::optional<Condition> parse_condition(const std::string& name);
bool condition_applicable(const SurfaceInvariants& inv, Condition c);

// One member of a quasi-extremal family at parameter eps.
struct FamilyInstance {
    PairingProblem problem;
    double predicted = 0.0;  // exponent of eps in the pairing
    double e_exponent = 0.0;  // |E| ~ eps^e_exponent
    double f_exponent = 0.0;  // |F| ~ eps^f_exponent
};

// Throws InapplicableCondition when the family does not apply to inv's case.
FamilyInstance build_family(const SurfaceInvariants& inv, Condition c, double eps);

struct EstimatePoint {
    double param = 0.0;
    double value = 0.0;
    double stderr_ = 0.0;
};

struct VerificationReport {
    std::string condition;
    std::vector<double> grid;
    std::vector<EstimatePoint> estimates;
    std::optional<SlopeFit> fit;
    double predicted = 0.0;
    double tolerance = 0.0;
    std::string verdict;  // PASS, FAIL or SKIP
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::string detail;
    bool passed() const { return verdict != "FAIL"; }
};

struct VerifyOptions {
    std::vector<double> grid;  // empty: the default grid of the test
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
    bool parallel = true;
};

std::vector<double> default_eps_grid();  // 2^-3 .. 2^-8

// Log-log slope of the pairing against eps; PASS iff |slope - predicted| <= 0.1.
VerificationReport necessity_slope_test(const SurfaceInvariants& inv, Condition c, const VerifyOptions& opt);

struct ScalingResult {
    double sigma = 1.0;
    double max_residual = 0.0;
    std::vector<double> lhs, rhs;  // per grid point
};

// Both sides of the dilation identity for f = indicator of [-2,2]^3, on a fixed 27-point x grid,
// using the tensor midpoint rule with n x n nodes on [-1,1]^2.
ScalingResult scaling_identity_serial(const SurfaceInvariants& inv, double sigma, int n = 512);
ScalingResult scaling_identity_parallel(const SurfaceInvariants& inv, double sigma, int n = 512);
VerificationReport scaling_identity_check(const SurfaceInvariants& inv, const std::vector<double>& sigmas, int n = 512,
                                          bool parallel = true);

// Measures of the sublevel sets {|omega| <= u*2^-m} in region j for m in the grid (default 4..12);
// u is the unit of |omega| on the region, see the implementation.
VerificationReport measure_slope_test(const SurfaceInvariants& inv, const Decomposition& dec, int region,
                                      const VerifyOptions& opt);

// Multiplicity of the factor behind region j in omega (0 for the complement).
int region_multiplicity(const Decomposition& dec, int region);

}  // namespace rsharp::numeric
