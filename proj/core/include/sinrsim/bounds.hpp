#pragma once

#include <cstdint>

#include "sinrsim/params.hpp"

namespace sinrsim::analysis {

/// Upper bound on g(alpha) = sum_{j >= 1} j^-alpha: the partial sum of the
/// first `terms` terms plus the integral tail bound terms^(1-alpha)/(alpha-1).
/// Requires alpha > 1 (the series diverges at 1).
double zeta_partial(double alpha, std::int64_t terms);

/// zeta_partial with the term count chosen so the gap between the returned
/// upper bound and the true value is below tol (the gap is at most
/// terms^-alpha). Stays below 1e-9 for alpha >= 1.1 within the term cap.
double zeta_upper(double alpha, double tol = 1e-9);

/// Smallest round-robin color count certified to keep a 1D grid strongly
/// connected: ceil(1 + (2 beta g(alpha))^(1/alpha)). Requires alpha > 1.
int sufficient_k_1d(const SinrParams& params);

/// Smallest sublattice spacing k certified to keep a 2D grid strongly
/// connected under the regular k^2-coloring, i.e. the smallest integer
/// strictly above (3 * 2^(alpha-1) beta (alpha-1)/(alpha-2))^(1/alpha).
/// The coloring then uses k^2 colors. Requires alpha > 2.
int sufficient_k_2d(const SinrParams& params);

}  // namespace sinrsim::analysis
