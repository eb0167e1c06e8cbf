#include "rsharp/errors.hpp"
#include "rsharp/numeric/verify.hpp"

#include <cmath>
#include <cstdio>

namespace rsharp::numeric {

namespace {

constexpr double kX12[3] = {-0.3711, 0.1357, 0.5923};
constexpr double kX3[3] = {-0.2113, 0.0417, 0.3089};

bool in_f(double v) { return v >= -2.0 && v <= 2.0; }

// Node values shared by every grid point.
struct Nodes {
    int n = 0;
    double h = 0.0, k1 = 0.0, k2 = 0.0, sigma = 1.0;
    std::vector<double> t, s1, s2, phi_t, phi_s;
};

Nodes make_nodes(const SurfaceInvariants& inv, double sigma, int n) {
    if (!inv.weight) throw Error(ErrorKind::InapplicableCondition, "the scaling identity needs a mixed weight");
    if (!(sigma > 0.0)) throw Error(ErrorKind::InapplicableCondition, "sigma must be positive");
    if (n < 2) throw Error(ErrorKind::DegenerateBox, "quadrature needs at least two nodes per axis");
    Nodes nd;
    nd.n = n;
    nd.h = 2.0 / n;
    nd.sigma = sigma;
    nd.k1 = inv.weight->kappa1.get_d();
    nd.k2 = inv.weight->kappa2.get_d();
    NumPoly phi(inv.phi);
    const double a1 = std::pow(sigma, nd.k1), a2 = std::pow(sigma, nd.k2);
    for (int i = 0; i < n; ++i) nd.t.push_back(-1.0 + (i + 0.5) * nd.h);
    for (double v : nd.t) {
        nd.s1.push_back(a1 * v);
        nd.s2.push_back(a2 * v);
    }
    nd.phi_t.resize(static_cast<std::size_t>(n) * n);
    nd.phi_s.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            nd.phi_t[i * n + j] = phi(nd.t[i], nd.t[j]);
            nd.phi_s[i * n + j] = phi(nd.s1[i], nd.s2[j]);
        }
    return nd;
}

void grid_point(int g, double& x1, double& x2, double& x3) {
    x1 = kX12[g / 9];
    x2 = kX12[(g / 3) % 3];
    x3 = kX3[g % 3];
}

// T_R f_sigma(x): the dilated indicator integrated over the original nodes.
double lhs_at(const Nodes& nd, int g) {
    double x1, x2, x3;
    grid_point(g, x1, x2, x3);
    const double a1 = std::pow(nd.sigma, nd.k1), a2 = std::pow(nd.sigma, nd.k2);
    double count = 0.0;
    for (int i = 0; i < nd.n; ++i) {
        if (!in_f(a1 * (x1 - nd.t[i]))) continue;
        for (int j = 0; j < nd.n; ++j)
            if (in_f(a2 * (x2 - nd.t[j])) && in_f(nd.sigma * (x3 - nd.phi_t[i * nd.n + j]))) count += 1.0;
    }
    return count * nd.h * nd.h;
}

// sigma^-(k1+k2) (T_{R_sigma} f)(sigma^k x), with the nodes carried to R_sigma.
double rhs_at(const Nodes& nd, int g) {
    double x1, x2, x3;
    grid_point(g, x1, x2, x3);
    const double a1 = std::pow(nd.sigma, nd.k1), a2 = std::pow(nd.sigma, nd.k2);
    const double y1 = a1 * x1, y2 = a2 * x2, y3 = nd.sigma * x3;
    double count = 0.0;
    for (int i = 0; i < nd.n; ++i) {
        if (!in_f(y1 - nd.s1[i])) continue;
        for (int j = 0; j < nd.n; ++j)
            if (in_f(y2 - nd.s2[j]) && in_f(y3 - nd.phi_s[i * nd.n + j])) count += 1.0;
    }
    const double jac = a1 * a2;
    return (count * jac * nd.h * nd.h) / jac;
}

ScalingResult finish(const Nodes& nd, std::vector<double> lhs, std::vector<double> rhs) {
    ScalingResult res;
    res.sigma = nd.sigma;
    for (std::size_t g = 0; g < lhs.size(); ++g) {
        double scale = std::max(std::fabs(lhs[g]), std::fabs(rhs[g]));
        if (scale > 0.0) res.max_residual = std::max(res.max_residual, std::fabs(lhs[g] - rhs[g]) / scale);
    }
    res.lhs = std::move(lhs);
    res.rhs = std::move(rhs);
    return res;
}

constexpr int kGridPoints = 27;

}  // namespace

ScalingResult scaling_identity_serial(const SurfaceInvariants& inv, double sigma, int n) {
    Nodes nd = make_nodes(inv, sigma, n);
    std::vector<double> lhs(kGridPoints), rhs(kGridPoints);
    for (int g = 0; g < kGridPoints; ++g) {
        lhs[g] = lhs_at(nd, g);
        rhs[g] = rhs_at(nd, g);
    }
    return finish(nd, std::move(lhs), std::move(rhs));
}

ScalingResult scaling_identity_parallel(const SurfaceInvariants& inv, double sigma, int n) {
    Nodes nd = make_nodes(inv, sigma, n);
    std::vector<double> lhs(kGridPoints), rhs(kGridPoints);
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
    for (int g = 0; g < kGridPoints; ++g) {
        lhs[g] = lhs_at(nd, g);
        rhs[g] = rhs_at(nd, g);
    }
    return finish(nd, std::move(lhs), std::move(rhs));
}

VerificationReport scaling_identity_check(const SurfaceInvariants& inv, const std::vector<double>& sigmas, int n,
                                          bool parallel) {
    VerificationReport rep;
    rep.condition = "scaling";
    rep.grid = sigmas;
    rep.tolerance = 1e-6;
    double worst = 0.0;
    for (double s : sigmas) {
        ScalingResult r = parallel ? scaling_identity_parallel(inv, s, n) : scaling_identity_serial(inv, s, n);
        rep.estimates.push_back({s, r.max_residual, 0.0});
        worst = std::max(worst, r.max_residual);
    }
    rep.predicted = 0.0;
    rep.verdict = worst < rep.tolerance ? "PASS" : "FAIL";
    char buf[64];
    std::snprintf(buf, sizeof buf, "max relative residual %.3e", worst);
    rep.detail = buf;
    return rep;
}

}  // namespace rsharp::numeric
