#include "rsharp/corpus.hpp"

#include "rsharp/classifier.hpp"
#include "rsharp/errors.hpp"
#include "rsharp/real_factor.hpp"
#include "rsharp/region.hpp"

#include <chrono>
#include <numeric>
#include <random>

namespace rsharp {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

Rational random_coeff(Rng& g) {
    int num = uniform(g, 1, 9) * (uniform(g, 0, 1) ? 1 : -1);
    return rat(num, uniform(g, 1, 6));
}

std::pair<long, long> random_weight(Rng& g) {
    for (;;) {
        long r = uniform(g, 1, 4), s = uniform(g, 1, 4);
        if (std::gcd(r, s) == 1) return {r, s};
    }
}

// Lattice points (a1, a2) with s*a1 + r*a2 = m, a1 + a2 in [2, D].
std::vector<Exponent> support_line(long r, long s, long m, int D) {
    std::vector<Exponent> pts;
    for (long a1 = 0; s * a1 <= m; ++a1) {
        long rest = m - s * a1;
        if (rest % r) continue;
        long a2 = rest / r;
        if (a1 + a2 >= 2 && a1 + a2 <= D) pts.emplace_back(static_cast<int>(a1), static_cast<int>(a2));
    }
    return pts;
}

BivarPoly generic_line(Rng& g, long r, long s, int D) {
    long m = uniform(g, 2, static_cast<int>(std::max(r, s)) * D);
    auto pts = support_line(r, s, m, D);
    BivarPoly p;
    for (auto [a, b] : pts)
        if (uniform(g, 0, 9) < 6) p += BivarPoly::monomial(random_coeff(g), a, b);
    if (p.is_zero() && !pts.empty()) p = BivarPoly::monomial(random_coeff(g), pts[0].first, pts[0].second);
    return p;
}

// z2^s - lambda*z1^r
BivarPoly curve(long r, long s, const Rational& lambda) {
    return BivarPoly::monomial(1, 0, static_cast<int>(s)) - BivarPoly::monomial(lambda, static_cast<int>(r), 0);
}

BivarPoly factor_product(Rng& g, long r, long s, int D) {
    BivarPoly p = BivarPoly::monomial(random_coeff(g), uniform(g, 0, 2), uniform(g, 0, 2));
    int deg = p.total_degree();
    const int step = static_cast<int>(std::max(r, s));
    int factors = uniform(g, 1, 3);
    for (int i = 0; i < factors; ++i) {
        int k = uniform(g, 1, 3);
        if (deg + k * step > D) break;
        Rational lam = random_coeff(g);
        if (i > 0 && uniform(g, 0, 3) == 0) {
            // nonreal pair: z2^{2s} + c z1^{2r}
            if (deg + 2 * step > D) break;
            p = p * (BivarPoly::monomial(1, 0, 2 * static_cast<int>(s)) +
                     BivarPoly::monomial(abs(lam), 2 * static_cast<int>(r), 0));
            deg += 2 * step;
            continue;
        }
        p = p * curve(r, s, lam).pow(k);
        deg += k * step;
    }
    return p;
}

BivarPoly power(Rng& g, int D) {
    int J = uniform(g, 2, std::min(D, 6));
    switch (uniform(g, 0, 3)) {
        case 0: return BivarPoly::monomial(random_coeff(g), J, 0);
        case 1: return BivarPoly::monomial(random_coeff(g), 0, J);
        case 2: {
            BivarPoly lin = BivarPoly::monomial(random_coeff(g), 1, 0) + BivarPoly::monomial(random_coeff(g), 0, 1);
            return lin.pow(J);
        }
        default: {
            int k = uniform(g, 2, std::max(2, D / 2));
            return curve(2, 1, random_coeff(g)).pow(k);
        }
    }
}

BivarPoly candidate(Rng& g, int D) {
    switch (uniform(g, 0, 5)) {
        case 0:
        case 1: {
            auto [r, s] = random_weight(g);
            return generic_line(g, r, s, D);
        }
        case 2: {
            auto [r, s] = random_weight(g);
            return factor_product(g, r, s, D);
        }
        case 3: return generic_line(g, 1, 1, D);
        case 4: return factor_product(g, 1, 1, D);
        default: return power(g, D);
    }
}

bool admissible(const BivarPoly& p, int D) {
    if (p.is_zero() || p.total_degree() > D) return false;
    for (const auto& [e, c] : p.terms())
        if (e.first + e.second < 2) return false;
    // The Newton formulation needs a rational adapting shear.
    if (is_homogeneous(p) && !is_linear_form_power(p) && !is_linearly_adapted(p)) {
        try {
            linearly_adapt(p);
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

void record(CorpusEntry& e, const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (c.applicable && !c.passed) {
            e.passed = false;
            e.failures.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
        }
}

}  // namespace

std::vector<BivarPoly> generate_corpus(const CorpusOptions& opt) {
    const int D = std::max(2, opt.max_degree);
    Rng g(opt.seed);
    std::vector<BivarPoly> out;
    while (static_cast<int>(out.size()) < opt.count) {
        BivarPoly p = candidate(g, D);
        if (admissible(p, D)) out.push_back(std::move(p));
    }
    return out;
}

CorpusEntry sweep_one(const BivarPoly& phi) {
    CorpusEntry e;
    e.expr = phi.format();
    try {
        SurfaceInvariants inv = classify(phi);
        e.label = case_label_name(inv);
        RieszRegion region = region_for(inv);
        record(e, symbolic_checks(inv));
        if (!is_excluded(inv.label)) {
            record(e, vertex_checks(region, inv));
            EquivalenceResult eq = check_equivalence(inv);
            record(e, eq.checks);
            if (!eq.equal) {
                e.passed = false;
                e.failures.push_back("newton and factor regions differ");
            }
        }
    } catch (const Error& err) {
        e.passed = false;
        e.failures.push_back(std::string(error_kind_name(err.kind())) + ": " + err.what());
    }
    return e;
}

CorpusReport run_corpus(const CorpusOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    CorpusReport rep;
    rep.options = opt;
    for (const auto& phi : generate_corpus(opt)) {
        rep.entries.push_back(sweep_one(phi));
        (rep.entries.back().passed ? rep.passed : rep.failed)++;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace rsharp
