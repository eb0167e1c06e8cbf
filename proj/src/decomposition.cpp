#include "rsharp/decomposition.hpp"
#include "rsharp/errors.hpp"

#include <cmath>

namespace rsharp {

bool Decomposition::in_extended(const RegionSpec& spec, double z1, double z2) const {
    double e = eps_tilde.get_d();
    double a = std::pow(std::fabs(z1), static_cast<double>(r));
    switch (spec.kind) {
        case RegionKind::Curve:
            return std::fabs(std::pow(z2, static_cast<double>(s)) - spec.lambda * std::pow(z1, static_cast<double>(r))) < e * a;
        case RegionKind::AxisZ2:
            return std::pow(std::fabs(z2), static_cast<double>(s)) < e * a;
        case RegionKind::AxisZ1:
            return a < e * std::pow(std::fabs(z2), static_cast<double>(s));
        case RegionKind::Complement:
            for (std::size_t j = 1; j < regions.size(); ++j)
                if (in_extended(regions[j], z1, z2)) return false;
            return true;
    }
    return false;
}

bool Decomposition::contains(const RegionSpec& spec, double z1, double z2, bool extended) const {
    if (!extended && (std::fabs(z1) > 1.0 || std::fabs(z2) > 1.0)) return false;
    return in_extended(spec, z1, z2);
}

int Decomposition::locate(double z1, double z2) const {
    for (std::size_t j = 1; j < regions.size(); ++j)
        if (in_extended(regions[j], z1, z2)) return static_cast<int>(j);
    return 0;
}

Decomposition decompose(const FactorDecomposition& fd, const Rational& eps_tilde) {
    Decomposition dec;
    dec.r = fd.r;
    dec.s = fd.s;
    dec.eps_tilde = eps_tilde;
    dec.regions.push_back({0, RegionKind::Complement, 0.0, 0, "R_0"});
    for (const auto& f : fd.real) {
        int j = static_cast<int>(dec.regions.size());
        dec.regions.push_back({j, RegionKind::Curve, f.lambda.approx, f.mult, "R_" + std::to_string(j)});
    }
    if (fd.nu2 != 0) {
        int j = static_cast<int>(dec.regions.size());
        dec.regions.push_back({j, RegionKind::AxisZ2, 0.0, fd.nu2, "R_z2"});
    }
    if (fd.nu1 != 0) {
        int j = static_cast<int>(dec.regions.size());
        dec.regions.push_back({j, RegionKind::AxisZ1, 0.0, fd.nu1, "R_z1"});
    }
    return dec;
}

Rational choose_eps_tilde(const FactorDecomposition& fd) {
    constexpr int kGrid = 100;
    for (int k = 4; k <= 60; ++k) {
        Rational eps(1);
        mpz_mul_2exp(eps.get_den_mpz_t(), eps.get_den_mpz_t(), k);
        Decomposition dec = decompose(fd, eps);
        if (dec.regions.size() <= 2) return eps;
        bool disjoint = true;
        for (int i = 0; i < kGrid && disjoint; ++i)
            for (int j = 0; j < kGrid && disjoint; ++j) {
                double z1 = -1.0 + (2.0 * i + 1.0) / kGrid, z2 = -1.0 + (2.0 * j + 1.0) / kGrid;
                int hits = 0;
                for (std::size_t q = 1; q < dec.regions.size(); ++q) hits += dec.in_extended(dec.regions[q], z1, z2);
                disjoint = hits <= 1;
            }
        if (disjoint) return eps;
    }
    consistency_failure("no separating epsilon for the factor regions");
}

Decomposition decompose(const SurfaceInvariants& inv) {
    if (!inv.omega_factors) {
        Decomposition dec;
        if (inv.weight) {
            dec.r = inv.weight->r;
            dec.s = inv.weight->s;
        }
        dec.eps_tilde = rat(1, 16);
        dec.regions.push_back({0, RegionKind::Complement, 0.0, 0, "R_0"});
        return dec;
    }
    const auto& fd = *inv.omega_factors;
    Decomposition dec = decompose(fd, choose_eps_tilde(fd));
    if (Rational(inv.T) > inv.d_omega) {
        for (const auto& reg : dec.regions) {
            bool hit = false;
            switch (inv.fT.kind) {
                case FactorKind::AxisZ1: hit = reg.kind == RegionKind::AxisZ1; break;
                case FactorKind::AxisZ2: hit = reg.kind == RegionKind::AxisZ2; break;
                case FactorKind::Curve:
                    hit = reg.kind == RegionKind::Curve && reg.mult == inv.T &&
                          std::fabs(reg.lambda - inv.fT.lambda.approx) < 1e-9;
                    break;
                case FactorKind::None: break;
            }
            if (hit) dec.heavy_index = reg.index;
        }
        if (dec.heavy_index < 0) consistency_failure("heavy factor has no region");
    }
    return dec;
}

}  // namespace rsharp
