#pragma once

#include <utility>
#include <vector>

namespace sinrsim::analysis {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double intercept_stderr = 0.0;
    double rss = 0.0;  // residual sum of squares in the transformed space
};

/// Both growth models behind a (n, k_min) series: a power law k = A n^b
/// (ordinary least squares of log k on log n) and a logarithmic model
/// k = c ln n + d (least squares of k on ln n). Residuals are also reported
/// back in k space so the two models can be compared on equal footing.
struct ScalingFit {
    LinearFit power_law;  // slope = exponent b, intercept = ln A
    LinearFit log_model;  // slope = coefficient c, intercept = d
    std::vector<double> power_residuals_k;
    std::vector<double> log_residuals_k;
    double power_rss_k = 0.0;
    double log_rss_k = 0.0;
};

/// Requires at least three points, at least three distinct n values, and
/// positive n and k throughout.
ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points);

}  // namespace sinrsim::analysis
