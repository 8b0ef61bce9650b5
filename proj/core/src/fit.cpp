#include "sinrsim/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sinrsim::analysis {

namespace {

LinearFit ols(const std::vector<double>& x, const std::vector<double>& y) {
    const auto m = static_cast<double>(x.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= m;
    mean_y /= m;

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit: no spread in the predictor");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        fit.rss += r * r;
    }
    if (x.size() > 2) {
        const double variance = fit.rss / (m - 2.0);
        fit.slope_stderr = std::sqrt(variance / sxx);
        fit.intercept_stderr = std::sqrt(variance * (1.0 / m + mean_x * mean_x / sxx));
    }
    return fit;
}

}  // namespace

ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("fit_scaling: need at least 3 points");
    std::vector<double> distinct;
    for (const auto& [n, k] : points) {
        if (!(n > 0.0) || !(k > 0.0)) {
            throw std::invalid_argument("fit_scaling: n and k must be positive");
        }
        distinct.push_back(n);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) {
        throw std::invalid_argument("fit_scaling: need at least 3 distinct n values");
    }

    std::vector<double> ln_n(points.size()), ln_k(points.size()), k(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        ln_n[i] = std::log(points[i].first);
        ln_k[i] = std::log(points[i].second);
        k[i] = points[i].second;
    }

    ScalingFit fit;
    fit.power_law = ols(ln_n, ln_k);
    fit.log_model = ols(ln_n, k);

    fit.power_residuals_k.resize(points.size());
    fit.log_residuals_k.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double power_pred = std::exp(fit.power_law.intercept + fit.power_law.slope * ln_n[i]);
        const double log_pred = fit.log_model.intercept + fit.log_model.slope * ln_n[i];
        fit.power_residuals_k[i] = k[i] - power_pred;
        fit.log_residuals_k[i] = k[i] - log_pred;
        fit.power_rss_k += fit.power_residuals_k[i] * fit.power_residuals_k[i];
        fit.log_rss_k += fit.log_residuals_k[i] * fit.log_residuals_k[i];
    }
    return fit;
}

}  // namespace sinrsim::analysis
