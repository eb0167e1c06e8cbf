#include "rsharp/classifier.hpp"
#include "rsharp/errors.hpp"

#include <algorithm>
#include <climits>

namespace rsharp {

bool is_rectangular(CaseLabel c) {
    return c == CaseLabel::CaseNu || c == CaseLabel::CaseA || c == CaseLabel::CaseN;
}

bool is_twisted(CaseLabel c) {
    return c == CaseLabel::TwistedI || c == CaseLabel::TwistedIIa || c == CaseLabel::TwistedIIb;
}

bool is_excluded(CaseLabel c) {
    return c == CaseLabel::ExcludedZero || c == CaseLabel::ExcludedMonomialPower ||
           c == CaseLabel::ExcludedLinearPower;
}

std::string case_label_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::CaseNu: return "CaseNu";
        case CaseLabel::CaseA: return "CaseA";
        case CaseLabel::CaseN: return "CaseN";
        case CaseLabel::TwistedI: return "TwistedI";
        case CaseLabel::TwistedIIa: return "TwistedIIa";
        case CaseLabel::TwistedIIb: return "TwistedIIb";
        case CaseLabel::Degenerate: return "Degenerate_TleqDomega";
        case CaseLabel::ExcludedZero: return "Excluded_Zero";
        case CaseLabel::ExcludedMonomialPower: return "Excluded_MonomialPower";
        case CaseLabel::ExcludedLinearPower: return "Excluded_LinearPower";
    }
    return "Unknown";
}

std::string case_label_name(const SurfaceInvariants& inv) {
    std::string n = case_label_name(inv.label);
    if (inv.label == CaseLabel::ExcludedMonomialPower)
        n += "(" + std::to_string(inv.excluded_power) + ")";
    return n;
}

void check_hypotheses(const BivarPoly& phi) {
    if (phi.coeff(0, 0) != 0) throw Error(ErrorKind::HypothesisViolation, "phi(0) must vanish");
    if (phi.coeff(1, 0) != 0 || phi.coeff(0, 1) != 0)
        throw Error(ErrorKind::HypothesisViolation, "grad phi(0) must vanish");
}

bool is_linear_form_power(const BivarPoly& phi) {
    if (phi.is_zero() || !is_homogeneous(phi)) return false;
    int J = phi.total_degree();
    if (J < 1) return false;
    if (phi.is_monomial()) {
        auto [a, b] = phi.terms().begin()->first;
        return a == J || b == J;
    }
    auto fd = factor_decomposition(phi, 1, 1);
    return fd.nu1 == 0 && fd.nu2 == 0 && fd.layers.size() == 1 && fd.layers[0].second == J &&
           fd.layers[0].first.degree() == 1;
}

namespace {

// alpha1 of the support point with the least alpha2.
std::pair<int, int> lowest_in_z2(const BivarPoly& p) {
    std::pair<int, int> best{INT_MAX, INT_MAX};
    for (const auto& [e, c] : p.terms())
        if (e.second < best.second) best = {e.first, e.second};
    return best;
}

int least_positive_power(const BivarPoly& p, int var) {
    int best = INT_MAX;
    for (const auto& [e, c] : p.terms()) {
        int k = var == 1 ? e.first : e.second;
        if (k > 0) best = std::min(best, k);
    }
    return best == INT_MAX ? 0 : best;
}

HeavyFactor find_heavy(const FactorDecomposition& fd, int T, long r, long s) {
    std::vector<HeavyFactor> hits;
    if (fd.nu1 == T) hits.push_back({FactorKind::AxisZ1, {}, true});
    if (fd.nu2 == T) hits.push_back({FactorKind::AxisZ2, {}, true});
    for (const auto& f : fd.real)
        if (f.mult == T) hits.push_back({FactorKind::Curve, f.lambda, r == 1 && s == 1});
    if (hits.size() != 1)
        throw Error(ErrorKind::UniquenessViolation, "heavy factor of the Hessian is not unique");
    return hits.front();
}

}  // namespace

OrientedSurface orient_heavy_factor(const SurfaceInvariants& inv) {
    OrientedSurface o;
    o.phi = inv.phi;
    const auto& w = *inv.weight;
    switch (inv.fT.kind) {
        case FactorKind::None:
            consistency_failure("no heavy factor to orient");
        case FactorKind::AxisZ2:
            return o;
        case FactorKind::AxisZ1:
            o.phi = inv.phi.swap_vars();
            o.swapped = true;
            return o;
        case FactorKind::Curve:
            break;
    }
    const RealRoot& lam = inv.fT.lambda;
    if (inv.fT.linear) {
        if (!lam.exact) throw Error(ErrorKind::IrrationalAdaptationRoot, "heavy line has an irrational slope");
        o.phi = inv.phi.shear(lam.value);
        o.shear = lam.value;
        return o;
    }
    o.curve = true;
    if (w.s == 1) {
        o.r = w.r;
        o.lambda = lam.approx;
        if (lam.exact) o.lambda_exact = lam.value;
    } else if (w.r == 1) {
        o.phi = inv.phi.swap_vars();
        o.swapped = true;
        o.r = w.s;
        o.lambda = 1.0 / lam.approx;
        if (lam.exact) o.lambda_exact = 1 / lam.value;
    } else {
        consistency_failure("heavy curve with min(r, s) > 1");
    }
    return o;
}

SurfaceInvariants classify(const BivarPoly& phi) {
    SurfaceInvariants inv;
    inv.phi = phi;
    if (phi.is_zero()) {
        inv.label = CaseLabel::ExcludedZero;
        return inv;
    }
    inv.weight = mixed_weight(phi);
    check_hypotheses(phi);
    const auto& w = *inv.weight;
    inv.d_h = w.d_h;
    inv.d_omega = 2 * w.d_h - 2;
    inv.omega = hessian_determinant(phi);
    inv.phi_factors = factor_decomposition(phi, w.r, w.s);
    if (inv.omega.is_zero()) {
        inv.excluded_power = phi.total_degree();
        if (!is_linear_form_power(phi)) consistency_failure("vanishing Hessian without a linear power");
        bool axis = phi.is_monomial();
        inv.label = axis ? CaseLabel::ExcludedMonomialPower : CaseLabel::ExcludedLinearPower;
        return inv;
    }
    inv.omega_factors = factor_decomposition(inv.omega, w.r, w.s);
    inv.T = inv.omega_factors->max_real_multiplicity();
    if (Rational(inv.T) <= inv.d_omega) {
        inv.label = CaseLabel::Degenerate;
        return inv;
    }
    inv.fT = find_heavy(*inv.omega_factors, inv.T, w.r, w.s);
    const auto& pf = *inv.phi_factors;
    if (inv.fT.linear) {
        switch (inv.fT.kind) {
            case FactorKind::AxisZ1: inv.nu = pf.nu1; break;
            case FactorKind::AxisZ2: inv.nu = pf.nu2; break;
            default: inv.nu = pf.multiplicity_of(inv.fT.lambda); break;
        }
        if (inv.nu >= 1) {
            inv.label = CaseLabel::CaseNu;
        } else {
            OrientedSurface o = orient_heavy_factor(inv);
            inv.A = least_positive_power(o.phi, 2);
            if (inv.A == 0) consistency_failure("heavy line is absent from the expansion");
            inv.label = inv.A == 1 ? CaseLabel::TwistedI : CaseLabel::CaseA;
        }
        OrientedSurface o = orient_heavy_factor(inv);
        inv.J = lowest_in_z2(o.phi).first;
        inv.Q = lowest_in_z2(hessian_determinant(o.phi)).first;
    } else {
        inv.N = pf.multiplicity_of(inv.fT.lambda);
        inv.label = inv.N >= 2 ? CaseLabel::CaseN : (inv.N == 1 ? CaseLabel::TwistedIIb : CaseLabel::TwistedIIa);
        OrientedSurface o = orient_heavy_factor(inv);
        auto f = factor_decomposition(o.phi, o.r, 1);
        auto g = factor_decomposition(hessian_determinant(o.phi), o.r, 1);
        inv.J = f.nu1 + static_cast<int>(o.r) * (f.nu2 + f.assoc.L - inv.N);
        inv.Q = g.nu1 + o.r * (g.nu2 + g.assoc.L - inv.T);
    }
    return inv;
}

namespace {

CheckResult make(const std::string& name, bool applicable, bool passed, const std::string& detail = "") {
    return {name, applicable, applicable ? passed : true, detail};
}

bool heavy_unique(const FactorDecomposition& fd, const Rational& d) {
    std::vector<int> mults{fd.nu1, fd.nu2};
    for (const auto& f : fd.real) mults.push_back(f.mult);
    int above = 0, at = 0;
    for (int m : mults) {
        above += Rational(m) > d;
        at += m > 0 && Rational(m) == d;
    }
    return above == 0 || (above == 1 && at == 0);
}

bool curve_bound(const FactorDecomposition& fd, const Rational& d) {
    if (std::min(fd.r, fd.s) <= 1) return true;
    for (const auto& f : fd.real)
        if (Rational(f.mult) >= d) return false;
    return true;
}

}  // namespace

std::vector<CheckResult> symbolic_checks(const SurfaceInvariants& inv) {
    std::vector<CheckResult> out;
    const BivarPoly& phi = inv.phi;
    bool weighted = inv.weight.has_value();

    bool lin_power = is_linear_form_power(phi);
    out.push_back(make("vanishing_hessian_iff_linear_power", !phi.is_zero(), inv.omega.is_zero() == lin_power));

    if (!weighted) return out;
    const auto& w = *inv.weight;
    Rational rs(w.r + w.s);

    {
        bool ok = true;
        for (int v = 1; v <= 2; ++v) {
            BivarPoly d = phi.derivative(v);
            if (d.is_zero()) continue;
            auto wd = weighted_degree(d, w.r, w.s);
            Rational expect = inv.d_h - Rational(v == 1 ? w.s : w.r) / rs;
            ok = ok && wd && Rational(*wd) / rs == expect;
        }
        out.push_back(make("derivative_weights", true, ok));
    }
    {
        bool app = !inv.omega.is_zero();
        bool ok = true;
        if (app) {
            auto wd = weighted_degree(inv.omega, w.r, w.s);
            ok = wd && Rational(*wd) / rs == inv.d_omega;
        }
        out.push_back(make("hessian_weight", app, ok));
    }
    out.push_back(make("subunit_weight_vanishing", inv.d_h < 1, inv.omega.is_zero()));
    {
        bool app = inv.omega.is_zero() && is_homogeneous(phi) && phi.coeff(phi.total_degree(), 0) != 0 &&
                   phi.coeff(phi.total_degree() - 1, 1) != 0;
        bool ok = true;
        if (app) {
            int J = phi.total_degree();
            Rational a = phi.coeff(J, 0), c1 = phi.coeff(J - 1, 1) / a;
            BivarPoly lin = BivarPoly::z1() + BivarPoly::monomial(c1 / J, 0, 1);
            ok = phi == lin.pow(J) * a;
        }
        out.push_back(make("vanishing_hessian_reconstruction", app, ok));
    }
    if (inv.phi_factors) {
        out.push_back(make("heavy_factor_unique_phi", true, heavy_unique(*inv.phi_factors, inv.d_h)));
        out.push_back(make("curve_multiplicity_bound_phi", true, curve_bound(*inv.phi_factors, inv.d_h)));
    }
    if (inv.omega_factors) {
        out.push_back(make("heavy_factor_unique_omega", true, heavy_unique(*inv.omega_factors, inv.d_omega)));
        out.push_back(make("curve_multiplicity_bound_omega", true, curve_bound(*inv.omega_factors, inv.d_omega)));
    }
    {
        bool app = is_rectangular(inv.label);
        bool ok = true;
        std::string detail;
        if (inv.label == CaseLabel::CaseN) ok = inv.T == 2 * inv.N - 3;
        if (inv.label == CaseLabel::CaseA) ok = inv.T == inv.A - 2;
        if (inv.label == CaseLabel::CaseNu) ok = inv.T == 2 * inv.nu - 2;
        if (app) detail = "T=" + std::to_string(inv.T);
        out.push_back(make("heavy_multiplicity_formula", app, ok, detail));
    }
    {
        bool app = is_rectangular(inv.label);
        bool ok = true;
        if (app) {
            OrientedSurface o = orient_heavy_factor(inv);
            if (inv.label == CaseLabel::CaseN) {
                ok = inv.Q == 2L * inv.J + o.r - 2;
            } else if (inv.label == CaseLabel::CaseA) {
                int lr = inv.J;
                for (const auto& [e, c] : o.phi.terms())
                    if (e.second == inv.A) lr = inv.J - e.first;
                ok = inv.Q == 2L * inv.J - lr - 2;
            } else {
                BivarPoly om = hessian_determinant(o.phi);
                auto [J, nu] = lowest_in_z2(o.phi);
                Rational c = o.phi.coeff(J, nu);
                Rational lead = c * c * Rational(static_cast<long>(J) * nu * (1 - nu - J));
                auto [qa, qb] = lowest_in_z2(om);
                ok = inv.Q == 2L * inv.J - 2 && qa == 2 * J - 2 && qb == 2 * nu - 2 &&
                     om.coeff(2 * J - 2, 2 * nu - 2) == lead;
            }
        }
        out.push_back(make("companion_exponent", app, ok, "J=" + std::to_string(inv.J) + " Q=" + std::to_string(inv.Q)));
    }
    {
        bool app = is_homogeneous(phi) && !inv.omega.is_zero() && Rational(inv.T) > inv.d_omega;
        out.push_back(make("homogeneous_heavy_is_nu", app, inv.label == CaseLabel::CaseNu));
    }
    {
        // Degree bookkeeping of the expansion.
        bool ok = true;
        for (const auto* fd : {inv.phi_factors ? &*inv.phi_factors : nullptr,
                               inv.omega_factors ? &*inv.omega_factors : nullptr}) {
            if (!fd) continue;
            int total = fd->complex_mult_sum;
            for (const auto& f : fd->real) total += f.mult;
            ok = ok && total == fd->assoc.L;
        }
        out.push_back(make("factor_degree_bookkeeping", true, ok));
    }
    return out;
}

}  // namespace rsharp
