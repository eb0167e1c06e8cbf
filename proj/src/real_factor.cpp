#include "rsharp/real_factor.hpp"
#include "rsharp/errors.hpp"
#include "rsharp/newton.hpp"

#include <algorithm>

namespace rsharp {

AssociatedUnivariate associated_univariate(const BivarPoly& phi, long r, long s) {
    if (phi.is_zero()) throw Error(ErrorKind::NotMixedHomogeneous, "zero polynomial has no expansion");
    if (!weighted_degree(phi, r, s))
        throw Error(ErrorKind::NotMixedHomogeneous, "support does not lie on one weighted line");
    AssociatedUnivariate au;
    au.r = r;
    au.s = s;
    au.nu1 = phi.degree_in(1);
    au.nu2 = phi.degree_in(2);
    for (const auto& [e, c] : phi.terms()) {
        au.nu1 = std::min(au.nu1, e.first);
        au.nu2 = std::min(au.nu2, e.second);
    }
    int amax = 0;
    for (const auto& [e, c] : phi.terms()) amax = std::max(amax, e.first - au.nu1);
    if (amax % r != 0) consistency_failure("expansion exponent not divisible by r");
    au.L = static_cast<int>(amax / r);
    std::vector<Rational> coeffs(au.L + 1);
    for (const auto& [e, c] : phi.terms()) {
        int a = e.first - au.nu1, b = e.second - au.nu2;
        if (b % s != 0) consistency_failure("expansion exponent not divisible by s");
        long l = b / s;
        if (l > au.L || a != amax - r * l) consistency_failure("support off the expansion lattice");
        coeffs[l] = c;
    }
    au.p = UnivarPoly(std::move(coeffs));
    if (au.p.coeff(0) == 0 || au.p.degree() != au.L) consistency_failure("associated polynomial has wrong shape");
    return au;
}

int FactorDecomposition::multiplicity_of(const RealRoot& lambda) const {
    for (const auto& f : real)
        if (same_root(f.lambda, lambda)) return f.mult;
    return 0;
}

int FactorDecomposition::max_real_multiplicity() const {
    int m = std::max(nu1, nu2);
    for (const auto& f : real) m = std::max(m, f.mult);
    return m;
}

FactorDecomposition factor_decomposition(const BivarPoly& phi, long r, long s) {
    FactorDecomposition fd;
    fd.assoc = associated_univariate(phi, r, s);
    fd.r = r;
    fd.s = s;
    fd.nu1 = fd.assoc.nu1;
    fd.nu2 = fd.assoc.nu2;
    fd.constant = fd.assoc.p.lead();
    fd.layers = squarefree_decomposition(fd.assoc.p);
    int real_total = 0;
    for (const auto& [layer, k] : fd.layers) {
        auto roots = isolate_real_roots(layer);
        for (auto& rt : roots) {
            fd.real.push_back(CurveFactor{rt, k});
            real_total += k;
        }
        int nonreal = layer.degree() - static_cast<int>(roots.size());
        if (nonreal > 0) fd.complex_pair_max = std::max(fd.complex_pair_max, k);
    }
    std::sort(fd.real.begin(), fd.real.end(),
              [](const CurveFactor& a, const CurveFactor& b) { return a.lambda.approx < b.lambda.approx; });
    fd.complex_mult_sum = fd.assoc.L - real_total;
    long m = s * fd.nu1 + r * fd.nu2 + r * s * fd.assoc.L;
    auto wd = weighted_degree(phi, r, s);
    if (!wd || *wd != m) consistency_failure("factor degree bookkeeping");
    return fd;
}

int max_irreducible_multiplicity(const FactorDecomposition& fd) {
    return std::max(fd.max_real_multiplicity(), fd.complex_pair_max);
}

bool is_homogeneous(const BivarPoly& phi) {
    if (phi.is_zero()) return true;
    int d = phi.total_degree();
    for (const auto& [e, c] : phi.terms())
        if (e.first + e.second != d) return false;
    return true;
}

Rational newton_distance_of(const BivarPoly& phi) { return newton_distance(phi.support()); }

namespace {

// Heaviest factor z2 - lambda*z1 (lambda != 0) exceeding d(phi), if any.
const CurveFactor* heavy_line(const FactorDecomposition& fd, const Rational& d) {
    const CurveFactor* out = nullptr;
    for (const auto& f : fd.real)
        if (Rational(f.mult) > d && (!out || f.mult > out->mult)) out = &f;
    return out;
}

}  // namespace

bool is_linearly_adapted(const BivarPoly& phi) {
    if (phi.is_zero() || !is_homogeneous(phi)) return true;
    auto fd = factor_decomposition(phi, 1, 1);
    return heavy_line(fd, newton_distance_of(phi)) == nullptr;
}

Adaptation linearly_adapt(const BivarPoly& phi) {
    Adaptation a{phi, std::nullopt};
    if (phi.is_zero() || !is_homogeneous(phi)) return a;
    auto fd = factor_decomposition(phi, 1, 1);
    const CurveFactor* h = heavy_line(fd, newton_distance_of(phi));
    if (!h) return a;
    if (!h->lambda.exact)
        throw Error(ErrorKind::IrrationalAdaptationRoot, "adapting factor has an irrational root");
    a.adapted = phi.shear(h->lambda.value);
    a.shear = h->lambda.value;
    if (!is_linearly_adapted(a.adapted)) consistency_failure("shear did not adapt the polynomial");
    return a;
}

}  // namespace rsharp
