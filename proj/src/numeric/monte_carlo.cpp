#include "rsharp/numeric/monte_carlo.hpp"
#include "rsharp/errors.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>

namespace rsharp::numeric {

TargetSet TargetSet::box(Interval a, Interval b, Interval c) {
    TargetSet e;
    e.y1 = a;
    e.off2 = 0.5 * (b.lo + b.hi);
    e.h2 = 0.5 * b.width();
    e.off3 = 0.5 * (c.lo + c.hi);
    e.h3 = 0.5 * c.width();
    return e;
}

bool TargetSet::contains(double v1, double v2, double v3) const {
    if (!y1.contains(v1)) return false;
    double c = off2 + (c2.empty() ? 0.0 : c2(v1, 0.0));
    if (std::fabs(v2 - c) > h2) return false;
    double d = off3 + (c3.empty() ? 0.0 : c3(v1, v2));
    return std::fabs(v3 - d) <= h3;
}

double ProposalComponent::band_width(double uu) const {
    double au = std::fabs(uu);
    double w = a * std::pow(au, alpha);
    if (b > 0.0) w = std::min(w, b * std::pow(au, beta));
    return w;
}

Proposal::Proposal(std::vector<ProposalComponent> comps) : comps_(std::move(comps)) {
    double total = 0.0;
    for (const auto& c : comps_) total += c.weight;
    for (auto& c : comps_) c.weight /= total;
}

Proposal Proposal::uniform(Interval t1, Interval t2) {
    ProposalComponent c;
    c.t1 = t1;
    c.t2 = t2;
    return Proposal({c});
}

Proposal Proposal::with_defensive(double weight) const {
    std::vector<ProposalComponent> comps = comps_;
    for (auto& c : comps) c.weight *= (1.0 - weight);
    ProposalComponent d;
    d.weight = weight;
    d.t1 = {-1.0, 1.0};
    d.t2 = {-1.0, 1.0};
    comps.push_back(d);
    return Proposal(std::move(comps));
}

double Proposal::density(double t1, double t2) const {
    double q = 0.0;
    for (const auto& c : comps_) {
        if (c.kind == ProposalComponent::Kind::Box) {
            if (c.t1.contains(t1) && c.t2.contains(t2)) q += c.weight / (c.t1.width() * c.t2.width());
            continue;
        }
        double u = c.swap ? t2 : t1, v = c.swap ? t1 : t2;
        if (!c.u.contains(u)) continue;
        double w = c.band_width(u);
        if (!(w > 0.0)) continue;
        double y = v - c.lambda * std::pow(u, c.r);
        if (std::fabs(y) <= w) q += c.weight / (c.u.width() * 2.0 * w);
    }
    return q;
}

void Proposal::sample(std::mt19937_64& rng, double& t1, double& t2, int cell) const {
    double pick = uniform01(rng), acc = 0.0;
    const ProposalComponent* c = &comps_.back();
    for (const auto& k : comps_) {
        acc += k.weight;
        if (pick < acc) {
            c = &k;
            break;
        }
    }
    if (c->kind == ProposalComponent::Kind::Box) {
        double a = uniform01(rng), b = uniform01(rng);
        if (cell >= 0) {
            a = ((cell / 16) + a) / 16.0;
            b = ((cell % 16) + b) / 16.0;
        }
        t1 = c->t1.lo + a * c->t1.width();
        t2 = c->t2.lo + b * c->t2.width();
        return;
    }
    double u = c->u.lo + uniform01(rng) * c->u.width();
    double w = c->band_width(u);
    double v = c->lambda * std::pow(u, c->r) + (2.0 * uniform01(rng) - 1.0) * w;
    t1 = c->swap ? v : u;
    t2 = c->swap ? u : v;
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int worker_threads() {
    if (const char* env = std::getenv("RSHARP_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

namespace {

// Neumaier-compensated sums of v and v^2.
struct Moments {
    double s = 0.0, cs = 0.0, s2 = 0.0, cs2 = 0.0;

    static void add(double& sum, double& comp, double v) {
        double t = sum + v;
        comp += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    void push(double v) {
        add(s, cs, v);
        add(s2, cs2, v * v);
    }
    void merge(const Moments& o) {
        add(s, cs, o.s + o.cs);
        add(s2, cs2, o.s2 + o.cs2);
    }
};

double pairing_sample(const PairingProblem& p, std::mt19937_64& rng, std::uint64_t index) {
    const SourceBox& F = p.F;
    double x1 = F.x1.lo + uniform01(rng) * F.x1.width();
    double x2 = F.x2.lo + uniform01(rng) * F.x2.width();
    double x3 = F.x3.lo + uniform01(rng) * F.x3.width();
    double t1, t2;
    p.proposal.sample(rng, t1, t2, p.stratified ? static_cast<int>(index % 256) : -1);
    if (std::fabs(t1) > 1.0 || std::fabs(t2) > 1.0) return 0.0;
    if (p.decomposition && !p.decomposition->contains(p.decomposition->regions[p.domain_region], t1, t2))
        return 0.0;
    if (!p.E.contains(x1 - t1, x2 - t2, x3 - p.phi(t1, t2))) return 0.0;
    double q = p.proposal.density(t1, t2);
    return q > 0.0 ? 1.0 / q : 0.0;
}

double measure_sample(const MeasureProblem& p, std::mt19937_64& rng, std::uint64_t) {
    double z1, z2;
    p.proposal.sample(rng, z1, z2, -1);
    if (std::fabs(z1) > 1.0 || std::fabs(z2) > 1.0) return 0.0;
    double w = std::fabs(p.omega(z1, z2));
    if (w < p.lo || w >= p.hi) return 0.0;
    if (!p.decomposition->contains(p.decomposition->regions[p.region], z1, z2)) return 0.0;
    double q = p.proposal.density(z1, z2);
    return q > 0.0 ? 1.0 / q : 0.0;
}

template <class Problem, class Sampler>
Moments run_chunk(const Problem& p, Sampler sampler, std::uint64_t chunk, std::uint64_t n, std::uint64_t seed) {
    Moments m;
    auto rng = substream(seed, chunk);
    std::uint64_t begin = chunk * kChunk, end = std::min(n, begin + kChunk);
    for (std::uint64_t i = begin; i < end; ++i) m.push(sampler(p, rng, i));
    return m;
}

Estimate finish(const std::vector<Moments>& parts, std::uint64_t n, double scale) {
    Moments total;
    for (const auto& m : parts) total.merge(m);
    Estimate e;
    e.samples = n;
    if (n == 0) return e;
    double mean = (total.s + total.cs) / static_cast<double>(n);
    double m2 = (total.s2 + total.cs2) / static_cast<double>(n);
    e.value = scale * mean;
    e.stderr_ = scale * std::sqrt(std::max(0.0, m2 - mean * mean) / static_cast<double>(n));
    return e;
}

template <class Problem, class Sampler>
Estimate serial(const Problem& p, Sampler sampler, std::uint64_t n, std::uint64_t seed, double scale) {
    std::uint64_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<Moments> parts(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) parts[c] = run_chunk(p, sampler, c, n, seed);
    return finish(parts, n, scale);
}

template <class Problem, class Sampler>
Estimate parallel(const Problem& p, Sampler sampler, std::uint64_t n, std::uint64_t seed, double scale) {
    long long chunks = static_cast<long long>((n + kChunk - 1) / kChunk);
    std::vector<Moments> parts(chunks);
#pragma omp parallel for schedule(static) num_threads(worker_threads())
    for (long long c = 0; c < chunks; ++c) parts[c] = run_chunk(p, sampler, static_cast<std::uint64_t>(c), n, seed);
    return finish(parts, n, scale);
}

void check_boxes(const PairingProblem& p) {
    if (!(p.F.volume() > 0.0) || !(p.E.volume() > 0.0)) throw Error(ErrorKind::DegenerateBox, "E and F need positive volume");
}

}  // namespace

Estimate estimate_pairing_serial(const PairingProblem& p, std::uint64_t n, std::uint64_t seed) {
    check_boxes(p);
    return serial(p, pairing_sample, n, seed, p.F.volume());
}

Estimate estimate_pairing_parallel(const PairingProblem& p, std::uint64_t n, std::uint64_t seed) {
    check_boxes(p);
    return parallel(p, pairing_sample, n, seed, p.F.volume());
}

Estimate estimate_pairing(const PairingProblem& p, std::uint64_t n, std::uint64_t seed) {
    return estimate_pairing_parallel(p, n, seed);
}

Estimate estimate_measure_serial(const MeasureProblem& p, std::uint64_t n, std::uint64_t seed) {
    return serial(p, measure_sample, n, seed, 1.0);
}

Estimate estimate_measure_parallel(const MeasureProblem& p, std::uint64_t n, std::uint64_t seed) {
    return parallel(p, measure_sample, n, seed, 1.0);
}

Estimate estimate_measure(const MeasureProblem& p, std::uint64_t n, std::uint64_t seed) {
    return estimate_measure_parallel(p, n, seed);
}

}  // namespace rsharp::numeric
