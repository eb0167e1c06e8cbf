#pragma once

#include <utility>
#include <vector>

namespace rsharp::numeric {

struct SlopeFit {
    std::vector<std::pair<double, double>> points;  // (log2 parameter, log2 estimate)
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // root mean square of the fit residuals
};

// Ordinary least squares of y on x. Needs at least two distinct x.
SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Fits log2(value) against log2(param); every value must be positive.
SlopeFit fit_loglog(const std::vector<double>& param, const std::vector<double>& value);

}  // namespace rsharp::numeric
