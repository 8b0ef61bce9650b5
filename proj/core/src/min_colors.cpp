#include "sinrsim/min_colors.hpp"

#include <cmath>
#include <stdexcept>

#include "sinrsim/generators.hpp"
#include "sinrsim/sinr.hpp"

namespace sinrsim::analysis {

namespace {

std::size_t grid_side_of(const NodeSet& nodes) {
    const auto side =
        static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(nodes.size()))));
    if (side * side != nodes.size()) {
        throw std::invalid_argument("min_k_regular: 2D family needs a square node count");
    }
    return side;
}

}  // namespace

int colors_for(Family family, int k) {
    return family == Family::regular_2d ? k * k : k;
}

MinColorResult min_k_regular(const NodeSet& nodes, const SinrParams& params, Family family,
                             int k_max, int threads) {
    if (family == Family::exhaustive) {
        throw std::invalid_argument("min_k_regular: use min_colors_exhaustive");
    }
    if (k_max < 1) throw std::invalid_argument("min_k_regular: k_max must be positive");

    std::size_t side = 0;
    if (family == Family::regular_1d) {
        if (nodes.dimension() != 1) {
            throw std::invalid_argument("min_k_regular: regular_1d needs a 1D instance");
        }
        if (static_cast<std::size_t>(k_max) > nodes.size()) {
            throw std::invalid_argument("min_k_regular: k_max exceeds node count");
        }
    } else {
        if (nodes.dimension() != 2) {
            throw std::invalid_argument("min_k_regular: regular_2d needs a 2D instance");
        }
        side = grid_side_of(nodes);
        if (static_cast<std::size_t>(k_max) > side) {
            throw std::invalid_argument("min_k_regular: k_max exceeds grid side");
        }
    }

    MinColorResult result;
    result.family = family;
    result.k_max_searched = k_max;
    for (int k = 1; k <= k_max; ++k) {
        const Coloring coloring = family == Family::regular_1d
                                      ? gen::regular_coloring_1d(nodes.size(), k)
                                      : gen::regular_coloring_2d(side, k);
        const bool connected = is_connected(nodes, coloring, params, threads);
        result.feasibility.emplace_back(k, connected);
        if (connected && !result.k_min) result.k_min = k;
    }
    return result;
}

MinColorResult min_colors_exhaustive(const NodeSet& nodes, const SinrParams& params, int k_max,
                                     int threads) {
    if (nodes.size() > 10) {
        throw std::invalid_argument("min_colors_exhaustive: guarded to n <= 10");
    }
    if (k_max < 1 || static_cast<std::size_t>(k_max) > nodes.size()) {
        throw std::invalid_argument("min_colors_exhaustive: need 1 <= k_max <= n");
    }

    MinColorResult result;
    result.family = Family::exhaustive;
    result.k_max_searched = k_max;
    for (int k = 1; k <= k_max; ++k) {
        bool feasible = false;
        gen::ColoringEnumeration enumeration(nodes.size(), k);
        while (auto coloring = enumeration.next()) {
            if (is_connected(nodes, *coloring, params, threads)) {
                feasible = true;
                break;
            }
        }
        result.feasibility.emplace_back(k, feasible);
        if (feasible && !result.k_min) result.k_min = k;
    }
    return result;
}

}  // namespace sinrsim::analysis
