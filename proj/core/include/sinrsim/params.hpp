#pragma once

#include <stdexcept>

namespace sinrsim {

/// Channel parameters of the uniform-power SINR model. Ambient noise is
/// fixed at zero and every transmitter uses unit power, so only the
/// path-loss exponent alpha and the reception threshold beta vary.
/// Behavior for beta < 1 is untested and rejected.
struct SinrParams {
    double alpha;
    double beta;

    static constexpr double noise = 0.0;
    static constexpr double power = 1.0;

    SinrParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
        if (!(alpha >= 1.0)) throw std::invalid_argument("SinrParams: alpha must be >= 1");
        if (!(beta >= 1.0)) throw std::invalid_argument("SinrParams: beta must be >= 1");
    }
};

}  // namespace sinrsim
