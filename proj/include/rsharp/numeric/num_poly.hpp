#pragma once

#include "rsharp/bivar_poly.hpp"

#include <vector>

namespace rsharp::numeric {

// Double-precision copy of a BivarPoly for the sampling kernels.
class NumPoly {
public:
    NumPoly() = default;
    explicit NumPoly(const BivarPoly& p);

    double operator()(double x, double y) const {
        double xp[BivarPoly::kDegreeCap + 1], yp[BivarPoly::kDegreeCap + 1];
        xp[0] = yp[0] = 1.0;
        for (int i = 1; i <= d1_; ++i) xp[i] = xp[i - 1] * x;
        for (int i = 1; i <= d2_; ++i) yp[i] = yp[i - 1] * y;
        double s = 0.0;
        for (const auto& t : terms_) s += t.c * xp[t.a] * yp[t.b];
        return s;
    }

    bool empty() const { return terms_.empty(); }
    // max |p| over [-rho1, rho1] x [-rho2, rho2], bounded termwise
    double abs_bound(double rho1, double rho2) const;
    // max of |dp/dz1| + |dp/dz2| over the box, bounded termwise
    double gradient_bound(double rho1, double rho2) const;
    // -p(-y1, -y2)
    NumPoly reflected() const;

private:
    struct Term {
        int a, b;
        double c;
    };
    std::vector<Term> terms_;
    int d1_ = 0, d2_ = 0;
};

}  // namespace rsharp::numeric
