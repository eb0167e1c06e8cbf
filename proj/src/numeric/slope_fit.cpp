#include "rsharp/numeric/slope_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace rsharp::numeric {

SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line needs two or more points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line needs distinct abscissae");
    SlopeFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        f.points.emplace_back(x[i], y[i]);
        double e = y[i] - (f.intercept + f.slope * x[i]);
        ss += e * e;
    }
    f.residual = std::sqrt(ss / n);
    return f;
}

SlopeFit fit_loglog(const std::vector<double>& param, const std::vector<double>& value) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < param.size(); ++i) {
        if (!(param[i] > 0.0) || !(value[i] > 0.0)) throw std::invalid_argument("fit_loglog needs positive data");
        lx.push_back(std::log2(param[i]));
        ly.push_back(std::log2(value[i]));
    }
    return fit_line(lx, ly);
}

}  // namespace rsharp::numeric
