#include "rsharp/errors.hpp"
#include "rsharp/numeric/verify.hpp"

#include <cmath>

namespace rsharp::numeric {

namespace {

struct Named {
    Condition c;
    const char* name;
};

constexpr Named kNames[] = {
    {Condition::QGeP, "q_ge_p"},
    {Condition::QLe3P, "q_le_3p"},
    {Condition::ScalingLine, "scaling_line"},
    {Condition::CaseNu, "case_nu"},
    {Condition::CaseN1OverN, "case_N_1overN"},
    {Condition::CaseNSlope, "case_N_slope"},
    {Condition::CaseASlope, "case_A_slope"},
};

Interval sym(double h) { return {-h, h}; }

NumPoly monomial(double c, int a) {
    return NumPoly(BivarPoly::monomial(Rational(c), a, 0));
}

}  // namespace

const std::vector<Condition>& all_conditions() {
    static const std::vector<Condition> all = [] {
        std::vector<Condition> v;
        for (const auto& n : kNames) v.push_back(n.c);
        return v;
    }();
    return all;
}

std::string condition_name(Condition c) {
    for (const auto& n : kNames)
        if (n.c == c) return n.name;
    return "?";
}

std::optional<Condition> parse_condition(const std::string& name) {
    for (const auto& n : kNames)
        if (name == n.name) return n.c;
    return std::nullopt;
}

bool condition_applicable(const SurfaceInvariants& inv, Condition c) {
    switch (c) {
        case Condition::QGeP:
        case Condition::QLe3P: return true;
        case Condition::ScalingLine: return inv.weight.has_value();
        case Condition::CaseNu: return inv.label == CaseLabel::CaseNu;
        case Condition::CaseN1OverN:
        case Condition::CaseNSlope: return inv.label == CaseLabel::CaseN;
        case Condition::CaseASlope: return inv.label == CaseLabel::CaseA;
    }
    return false;
}

FamilyInstance build_family(const SurfaceInvariants& inv, Condition c, double eps) {
    if (!condition_applicable(inv, c))
        throw Error(ErrorKind::InapplicableCondition,
                    condition_name(c) + " does not apply to " + case_label_name(inv));
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::DegenerateBox, "family parameter must lie in (0, 1)");

    FamilyInstance fi;
    PairingProblem& p = fi.problem;
    p.phi = NumPoly(inv.phi);

    switch (c) {
        case Condition::QGeP: {
            double K = std::max(1.0, p.phi.abs_bound(1.0, 1.0)) / eps;
            p.E = TargetSet::box(sym(3 * K), sym(3 * K), sym(3 * K));
            p.F = {sym(K), sym(K), sym(K)};
            p.proposal = Proposal::uniform(sym(1.0), sym(1.0));
            p.stratified = true;
            fi.predicted = -3.0;
            fi.e_exponent = fi.f_exponent = -3.0;
            break;
        }
        case Condition::QLe3P: {
            double C = 2.0 + 2.0 * p.phi.gradient_bound(1.25, 1.25);
            p.E.y1 = sym(0.25);
            p.E.h2 = 0.25;
            p.E.c3 = p.phi.reflected();
            p.E.h3 = C * eps;
            p.F = {sym(eps), sym(eps), sym(eps)};
            p.proposal = Proposal::uniform(sym(0.25 + eps), sym(0.25 + eps));
            p.stratified = true;
            fi.predicted = 3.0;
            fi.e_exponent = 1.0;
            fi.f_exponent = 3.0;
            break;
        }
        case Condition::ScalingLine: {
            const double k1 = inv.weight->kappa1.get_d(), k2 = inv.weight->kappa2.get_d();
            const double c1 = 0.125 * std::pow(eps, k1), c2 = 0.125 * std::pow(eps, k2);
            double C = 1.0 + p.phi.abs_bound(0.5, 0.5);
            p.E = TargetSet::box(sym(3 * c1), sym(3 * c2), sym(C * eps));
            p.F = {sym(c1), sym(c2), sym(eps)};
            p.proposal = Proposal::uniform(sym(4 * c1), sym(4 * c2));
            p.stratified = true;
            fi.predicted = 2.0 * (k1 + k2) + 1.0;
            fi.e_exponent = fi.f_exponent = k1 + k2 + 1.0;
            break;
        }
        case Condition::CaseNu: {
            const int nu = inv.nu;
            const double en = std::pow(eps, nu);
            p.phi = NumPoly(orient_heavy_factor(inv).phi);
            p.E = TargetSet::box(sym(3.0), sym(3 * eps), sym(3 * en));
            p.F = {sym(1.0), sym(eps), sym(en)};
            p.proposal = Proposal::uniform(sym(1.0), sym(4 * eps));
            p.stratified = true;
            fi.predicted = nu + 2.0;
            fi.e_exponent = fi.f_exponent = nu + 1.0;
            break;
        }
        case Condition::CaseN1OverN: {
            const int N = inv.N;
            const double eN = std::pow(eps, N);
            OrientedSurface o = orient_heavy_factor(inv);
            p.phi = NumPoly(o.phi);
            const double lam = std::fabs(o.lambda);
            p.E = TargetSet::box(sym(3.0), sym(3 * lam + 1), sym(3 * eN));
            p.F = {sym(1.0), sym(lam), sym(eN)};
            ProposalComponent band;
            band.kind = ProposalComponent::Kind::Band;
            band.u = sym(1.0);
            band.lambda = o.lambda;
            band.r = static_cast<int>(o.r);
            band.a = 4 * eps;
            p.proposal = Proposal({band}).with_defensive(0.1);
            fi.predicted = N + 1.0;
            fi.e_exponent = fi.f_exponent = N;
            break;
        }
        case Condition::CaseNSlope: {
            const int N = inv.N;
            const double eN = std::pow(eps, N);
            OrientedSurface o = orient_heavy_factor(inv);
            p.phi = NumPoly(o.phi);
            const int r = static_cast<int>(o.r);
            p.E.y1 = {0.5, 1.0};
            // centre -lambda*(-y1)^r
            p.E.c2 = monomial(-o.lambda * ((r % 2) ? -1.0 : 1.0), r);
            p.E.h2 = 3 * eps;
            p.E.h3 = 3 * eN;
            p.F = {sym(eps), sym(eps), sym(eN)};
            ProposalComponent band;
            band.kind = ProposalComponent::Kind::Band;
            band.u = {-1.0 - eps, -0.5 + eps};
            band.lambda = o.lambda;
            band.r = r;
            band.a = 1.05 * eps * (4.0 + std::fabs(o.lambda) * r * std::pow(2.0, r - 1));
            p.proposal = Proposal({band});
            fi.predicted = N + 3.0;
            fi.e_exponent = N + 1.0;
            fi.f_exponent = N + 2.0;
            break;
        }
        case Condition::CaseASlope: {
            const int A = inv.A;
            const double eA = std::pow(eps, A);
            p.phi = NumPoly(orient_heavy_factor(inv).phi);
            p.E.y1 = {0.5, 1.0};
            p.E.h2 = 3 * eps;
            p.E.c3 = p.phi.reflected();
            p.E.h3 = 3 * eA;
            p.F = {sym(eA), sym(eps), sym(eA)};
            p.proposal = Proposal::uniform({-1.0 - eA, -0.5 + eA}, sym(4.2 * eps));
            p.stratified = true;
            fi.predicted = 2.0 * A + 2.0;
            fi.e_exponent = A + 1.0;
            fi.f_exponent = 2.0 * A + 1.0;
            break;
        }
    }
    return fi;
}

std::vector<double> default_eps_grid() {
    std::vector<double> g;
    for (int k = 3; k <= 8; ++k) g.push_back(std::ldexp(1.0, -k));
    return g;
}

VerificationReport necessity_slope_test(const SurfaceInvariants& inv, Condition c, const VerifyOptions& opt) {
    VerificationReport rep;
    rep.condition = condition_name(c);
    rep.grid = opt.grid.empty() ? default_eps_grid() : opt.grid;
    rep.tolerance = 0.1;
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    if (rep.grid.size() < 5) throw Error(ErrorKind::InapplicableCondition, "slope tests need at least five grid points");

    std::vector<double> values;
    for (std::size_t k = 0; k < rep.grid.size(); ++k) {
        FamilyInstance fi = build_family(inv, c, rep.grid[k]);
        rep.predicted = fi.predicted;
        std::uint64_t point_seed = substream(opt.seed, k)();
        Estimate e = opt.parallel ? estimate_pairing_parallel(fi.problem, opt.samples, point_seed)
                                  : estimate_pairing_serial(fi.problem, opt.samples, point_seed);
        rep.estimates.push_back({rep.grid[k], e.value, e.stderr_});
        values.push_back(e.value);
    }
    for (double v : values)
        if (!(v > 0.0)) {
            rep.verdict = "FAIL";
            rep.detail = "zero pairing estimate";
            return rep;
        }
    rep.fit = fit_loglog(rep.grid, values);
    rep.verdict = std::fabs(rep.fit->slope - rep.predicted) <= rep.tolerance ? "PASS" : "FAIL";
    return rep;
}

}  // namespace rsharp::numeric
