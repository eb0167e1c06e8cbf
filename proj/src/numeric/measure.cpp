#include "rsharp/errors.hpp"
#include "rsharp/numeric/verify.hpp"

#include <cmath>

namespace rsharp::numeric {

namespace {

// |omega(u, v0(u) + y)| ~ C |u|^Q |y|^n near a factor, with y measured in the band coordinate.
struct BandModel {
    bool usable = false;
    ProposalComponent shape;  // centre, swap and cap; a and alpha are filled per level
    double C = 1.0, Q = 0.0;
    int n = 1;
};

double multiplicity_coefficient(const UnivarPoly& p, const RealRoot& lam, int n) {
    UnivarPoly d = p;
    Rational fact(1);
    for (int k = 1; k <= n; ++k) {
        d = d.derivative();
        fact *= k;
    }
    if (lam.exact) return Rational(d.eval(lam.value) / fact).get_d();
    return d.eval(lam.approx) / fact.get_d();
}

BandModel band_model(const FactorDecomposition& fd, const Decomposition& dec, const RegionSpec& spec) {
    BandModel bm;
    const auto& a = fd.assoc;
    const double eps = dec.eps_tilde.get_d();
    const long r = fd.r, s = fd.s;
    ProposalComponent& c = bm.shape;
    c.kind = ProposalComponent::Kind::Band;
    c.u = {-1.0, 1.0};
    switch (spec.kind) {
        case RegionKind::Complement: return bm;
        case RegionKind::AxisZ2:
            bm.n = a.nu2;
            bm.C = std::fabs(a.p.coeff(0).get_d());
            bm.Q = a.nu1 + static_cast<double>(r) * a.L;
            c.b = std::pow(eps, 1.0 / s);
            c.beta = static_cast<double>(r) / s;
            break;
        case RegionKind::AxisZ1:
            bm.n = a.nu1;
            bm.C = std::fabs(a.p.lead().get_d());
            bm.Q = a.nu2 + static_cast<double>(s) * a.L;
            c.swap = true;
            c.b = std::pow(eps, 1.0 / r);
            c.beta = static_cast<double>(s) / r;
            break;
        case RegionKind::Curve: {
            const CurveFactor* f = nullptr;
            for (const auto& cf : fd.real)
                if (std::fabs(cf.lambda.approx - spec.lambda) < 1e-12) f = &cf;
            if (!f) consistency_failure("curve region without a factor");
            const double lam = f->lambda.approx;
            const int n = f->mult;
            const double pt = std::fabs(multiplicity_coefficient(a.p, f->lambda, n));
            bm.n = n;
            if (s == 1) {
                c.lambda = lam;
                c.r = static_cast<int>(r);
                bm.C = std::pow(std::fabs(lam), a.nu2) * pt;
                bm.Q = a.nu1 + static_cast<double>(r) * (a.L + a.nu2 - n);
                c.b = eps;
                c.beta = static_cast<double>(r);
            } else if (r == 1) {
                c.lambda = 1.0 / lam;
                c.r = static_cast<int>(s);
                c.swap = true;
                bm.C = std::pow(std::fabs(lam), 2.0 * n - (a.nu1 + a.L)) * pt;
                bm.Q = static_cast<double>(s) * (a.nu1 + a.L - n) + a.nu2;
                c.b = eps / (lam * lam);
                c.beta = static_cast<double>(s);
            } else {
                return bm;
            }
            break;
        }
    }
    bm.usable = bm.n > 0 && bm.C > 0.0;
    return bm;
}

Proposal level_proposal(const BandModel& bm, double level, double k1, double k2) {
    std::vector<ProposalComponent> comps;
    const double box_weight = bm.usable ? 0.45 : 0.9;
    const double rho[] = {0x1p-6, 0x1p-3, 1.0, 0x1p3, 0x1p6};
    for (double r : rho) {
        double delta = std::min(1.0, level * r);
        ProposalComponent b;
        b.weight = box_weight / 5;
        b.t1 = {-std::pow(delta, k1), std::pow(delta, k1)};
        b.t2 = {-std::pow(delta, k2), std::pow(delta, k2)};
        comps.push_back(b);
    }
    if (bm.usable) {
        const double widen[] = {0.25, 1.0, 4.0};
        for (double r : widen) {
            ProposalComponent c = bm.shape;
            c.weight = 0.45 / 3;
            c.a = r * std::pow(level / bm.C, 1.0 / bm.n);
            c.alpha = -bm.Q / bm.n;
            comps.push_back(c);
        }
    }
    return Proposal(std::move(comps)).with_defensive(0.1);
}

// Unit of |omega| on a region. On the complement: the smallest |omega| where the region meets the
// boundary of the square, so every sublevel set below it is an exact dilate and stays inside the
// square. On a factor region: the largest |omega| over a midpoint grid of the region.
double region_scale(const NumPoly& omega, const Decomposition& dec, const RegionSpec& spec) {
    constexpr int n = 1024;
    if (spec.kind == RegionKind::Complement) {
        double best = HUGE_VAL;
        for (int i = 0; i < 4 * n; ++i) {
            double t = -1.0 + (2.0 * (i % n) + 1.0) / n;
            double z1 = (i / n == 0) ? 1.0 : (i / n == 1) ? -1.0 : t;
            double z2 = (i / n == 2) ? 1.0 : (i / n == 3) ? -1.0 : t;
            if (dec.contains(spec, z1, z2)) best = std::min(best, std::fabs(omega(z1, z2)));
        }
        return std::isfinite(best) ? best : 0.0;
    }
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double z1 = -1.0 + (2.0 * i + 1.0) / n;
        for (int j = 0; j < n; ++j) {
            double z2 = -1.0 + (2.0 * j + 1.0) / n;
            if (dec.contains(spec, z1, z2)) best = std::max(best, std::fabs(omega(z1, z2)));
        }
    }
    return best;
}

}  // namespace

int region_multiplicity(const Decomposition& dec, int region) { return dec.regions.at(region).mult; }

VerificationReport measure_slope_test(const SurfaceInvariants& inv, const Decomposition& dec, int region,
                                      const VerifyOptions& opt) {
    VerificationReport rep;
    const RegionSpec& spec = dec.regions.at(region);
    rep.condition = "measure:" + spec.label;
    rep.tolerance = 0.1;
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    if (opt.grid.empty())
        for (int m = 4; m <= 12; ++m) rep.grid.push_back(m);
    else
        rep.grid = opt.grid;

    if (!inv.omega_factors || inv.omega.is_constant()) {
        rep.verdict = "SKIP";
        rep.detail = "constant Hessian: the level sets are degenerate";
        return rep;
    }
    const int n = spec.mult;
    if (Rational(n) == inv.d_omega)
        throw Error(ErrorKind::InapplicableCondition, "region multiplicity equals d_omega");
    const double k = std::max(static_cast<double>(n), inv.d_omega.get_d());
    rep.predicted = -1.0 / k;

    const auto& fd = *inv.omega_factors;
    auto W = weighted_degree(inv.omega, fd.r, fd.s);
    if (!W || *W <= 0) consistency_failure("Hessian is not mixed homogeneous");
    const double k1 = static_cast<double>(fd.s) / *W, k2 = static_cast<double>(fd.r) / *W;
    BandModel bm = band_model(fd, dec, spec);

    MeasureProblem mp;
    mp.omega = NumPoly(inv.omega);
    const double scale = region_scale(mp.omega, dec, spec);
    if (!(scale > 0.0)) {
        rep.verdict = "SKIP";
        rep.detail = "region has no grid points";
        return rep;
    }
    rep.detail = "sublevel sets |omega| <= u*2^-m with unit u = " + std::to_string(scale);
    mp.decomposition = &dec;
    mp.region = region;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < rep.grid.size(); ++i) {
        const double m = rep.grid[i];
        mp.hi = scale * std::ldexp(1.0, -static_cast<int>(m));
        mp.lo = 0.0;
        mp.proposal = level_proposal(bm, mp.hi, k1, k2);
        std::uint64_t point_seed = substream(opt.seed, i)();
        Estimate e = opt.parallel ? estimate_measure_parallel(mp, opt.samples, point_seed)
                                  : estimate_measure_serial(mp, opt.samples, point_seed);
        rep.estimates.push_back({m, e.value, e.stderr_});
        if (e.value > 0.0) {
            xs.push_back(m);
            ys.push_back(std::log2(e.value));
        }
    }
    if (xs.size() < 5) {
        rep.verdict = "SKIP";
        rep.detail = "fewer than five nonempty level sets";
        return rep;
    }
    rep.fit = fit_line(xs, ys);
    rep.verdict = rep.fit->slope <= rep.predicted + rep.tolerance ? "PASS" : "FAIL";
    return rep;
}

}  // namespace rsharp::numeric
