#include "sinrsim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sinrsim::analysis {

namespace {

constexpr std::int64_t kMaxAdaptiveTerms = 1'000'000'000;

void require_converges(double alpha) {
    if (!(alpha > 1.0)) {
        throw std::invalid_argument("zeta: series diverges for alpha <= 1");
    }
}

}  // namespace

double zeta_partial(double alpha, std::int64_t terms) {
    require_converges(alpha);
    if (terms < 1) throw std::invalid_argument("zeta_partial: need at least one term");
    long double sum = 0.0L;
    for (std::int64_t j = terms; j >= 1; --j) {  // small terms first
        sum += std::pow(static_cast<long double>(j), static_cast<long double>(-alpha));
    }
    const long double tail =
        std::pow(static_cast<long double>(terms), static_cast<long double>(1.0 - alpha)) /
        (alpha - 1.0);
    return static_cast<double>(sum + tail);
}

double zeta_upper(double alpha, double tol) {
    require_converges(alpha);
    if (!(tol > 0.0)) throw std::invalid_argument("zeta_upper: tol must be positive");
    // The bound overshoots by less than terms^-alpha.
    const double needed = std::ceil(std::pow(tol, -1.0 / alpha));
    const auto terms = static_cast<std::int64_t>(
        std::clamp(needed, 64.0, static_cast<double>(kMaxAdaptiveTerms)));
    return zeta_partial(alpha, terms);
}

int sufficient_k_1d(const SinrParams& params) {
    if (!(params.alpha > 1.0)) {
        throw std::invalid_argument("sufficient_k_1d: requires alpha > 1");
    }
    const double g = zeta_upper(params.alpha);
    const double value = 1.0 + std::pow(2.0 * params.beta * g, 1.0 / params.alpha);
    return static_cast<int>(std::ceil(value));
}

int sufficient_k_2d(const SinrParams& params) {
    if (!(params.alpha > 2.0)) {
        throw std::invalid_argument("sufficient_k_2d: requires alpha > 2");
    }
    const double value = std::pow(3.0 * std::pow(2.0, params.alpha - 1.0) * params.beta *
                                      (params.alpha - 1.0) / (params.alpha - 2.0),
                                  1.0 / params.alpha);
    return static_cast<int>(std::floor(value)) + 1;  // strictly above
}

}  // namespace sinrsim::analysis
