#include "rsharp/numeric/num_poly.hpp"

#include <algorithm>
#include <cmath>

namespace rsharp::numeric {

NumPoly::NumPoly(const BivarPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        terms_.push_back({e.first, e.second, c.get_d()});
        d1_ = std::max(d1_, e.first);
        d2_ = std::max(d2_, e.second);
    }
}

double NumPoly::abs_bound(double rho1, double rho2) const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::fabs(t.c) * std::pow(rho1, t.a) * std::pow(rho2, t.b);
    return s;
}

double NumPoly::gradient_bound(double rho1, double rho2) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        if (t.a > 0) s += std::fabs(t.c) * t.a * std::pow(rho1, t.a - 1) * std::pow(rho2, t.b);
        if (t.b > 0) s += std::fabs(t.c) * t.b * std::pow(rho1, t.a) * std::pow(rho2, t.b - 1);
    }
    return s;
}

NumPoly NumPoly::reflected() const {
    NumPoly out = *this;
    for (auto& t : out.terms_) t.c = ((t.a + t.b) % 2 == 0) ? -t.c : t.c;
    return out;
}

}  // namespace rsharp::numeric
