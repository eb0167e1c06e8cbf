#pragma once

#include "rsharp/decomposition.hpp"
#include "rsharp/numeric/num_poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rsharp::numeric {

struct Interval {
    double lo = 0.0, hi = 0.0;
    double width() const { return hi - lo; }
    bool contains(double v) const { return lo <= v && v <= hi; }
};

// F in the pairing: an axis-parallel box.
struct SourceBox {
    Interval x1, x2, x3;
    double volume() const { return x1.width() * x2.width() * x3.width(); }
};

// E in the pairing: y1 in an interval, |y2 - off2 - c2(y1)| <= h2, |y3 - off3 - c3(y1, y2)| <= h3.
// The bands are shears of a box, so the volume does not depend on the centres.
struct TargetSet {
    Interval y1;
    NumPoly c2;  // evaluated at (y1, 0); empty means zero
    NumPoly c3;
    double off2 = 0.0, h2 = 0.0;
    double off3 = 0.0, h3 = 0.0;

    static TargetSet box(Interval a, Interval b, Interval c);
    bool contains(double y1, double y2, double y3) const;
    double volume() const { return y1.width() * 4.0 * h2 * h3; }
};

// Mixture proposal on the parameter plane. Every component's density is exact, so the
// importance-weighted estimator is unbiased whenever a component covers the integrand.
struct ProposalComponent {
    enum class Kind { Box, Band } kind = Kind::Box;
    double weight = 1.0;
    Interval t1, t2;  // Box
    // Band: u uniform on `u`, v = lambda*u^r + y with |y| <= w(u) = min(a|u|^alpha, b|u|^beta);
    // (t1, t2) = swap ? (v, u) : (u, v).
    Interval u;
    double lambda = 0.0;
    int r = 1;
    double a = 0.0, alpha = 0.0, b = 0.0, beta = 0.0;
    bool swap = false;

    double band_width(double uu) const;
};

class Proposal {
public:
    Proposal() = default;
    explicit Proposal(std::vector<ProposalComponent> comps);
    static Proposal uniform(Interval t1, Interval t2);

    // Adds a uniform [-1,1]^2 component carrying `weight` of the mass.
    Proposal with_defensive(double weight) const;

    double density(double t1, double t2) const;
    // cell in [0, 256) selects a 16x16 stratum of box components when stratifying
    void sample(std::mt19937_64& rng, double& t1, double& t2, int cell) const;

    const std::vector<ProposalComponent>& components() const { return comps_; }

private:
    std::vector<ProposalComponent> comps_;
};

struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
};

struct PairingProblem {
    NumPoly phi;
    TargetSet E;
    SourceBox F;
    Proposal proposal;
    const Decomposition* decomposition = nullptr;  // optional domain restriction
    int domain_region = 0;
    bool stratified = false;
};

// Integral over F of T chi_E, where T f(x) = int_{[-1,1]^2} f(x' - t, x3 - phi(t)) dt.
Estimate estimate_pairing_serial(const PairingProblem& p, std::uint64_t n, std::uint64_t seed);
Estimate estimate_pairing_parallel(const PairingProblem& p, std::uint64_t n, std::uint64_t seed);
Estimate estimate_pairing(const PairingProblem& p, std::uint64_t n, std::uint64_t seed);

struct MeasureProblem {
    NumPoly omega;
    const Decomposition* decomposition = nullptr;
    int region = 0;
    double lo = 0.0, hi = 0.0;  // lo <= |omega| < hi
    Proposal proposal;
};

// Lebesgue measure of {z in R_j : lo <= |omega(z)| < hi}.
Estimate estimate_measure_serial(const MeasureProblem& p, std::uint64_t n, std::uint64_t seed);
Estimate estimate_measure_parallel(const MeasureProblem& p, std::uint64_t n, std::uint64_t seed);
Estimate estimate_measure(const MeasureProblem& p, std::uint64_t n, std::uint64_t seed);

// Independent engine per (seed, stream) pair.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream);
double uniform01(std::mt19937_64& rng);

// Thread count for the parallel kernels: RSHARP_THREADS if set, else the OpenMP default.
int worker_threads();

constexpr std::uint64_t kChunk = 4096;

}  // namespace rsharp::numeric
