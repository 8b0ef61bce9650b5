#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sinrsim/coloring.hpp"
#include "sinrsim/node_set.hpp"
#include "sinrsim/params.hpp"

namespace sinrsim::analysis {

enum class Family {
    regular_1d,  // round-robin colorings, parameter k = color count
    regular_2d,  // sublattice colorings, parameter k = spacing, k^2 colors
    exhaustive,  // all colorings up to color permutation
};

/// Number of colors a family parameter k stands for.
int colors_for(Family family, int k);

struct MinColorResult {
    Family family;
    /// (k, connected) for every k = 1..k_max searched. Connectivity is not
    /// assumed monotone in k, so the whole vector is reported.
    std::vector<std::pair<int, bool>> feasibility;
    /// Smallest feasible k, if any was found within the searched range.
    std::optional<int> k_min;
    int k_max_searched = 0;
};

/// Feasibility of the regular coloring family for k = 1..k_max on the given
/// instance. 1D instances take round-robin colorings of their sorted order;
/// 2D instances must be canonical grids (regular_2d colorings require the
/// sublattice structure) and k_max may not exceed the side.
MinColorResult min_k_regular(const NodeSet& nodes, const SinrParams& params, Family family,
                             int k_max, int threads = 0);

/// Exact minimum color count over all colorings, by exhaustive search of
/// permutation-reduced assignments. Guarded to n <= 10.
MinColorResult min_colors_exhaustive(const NodeSet& nodes, const SinrParams& params, int k_max,
                                     int threads = 0);

}  // namespace sinrsim::analysis
