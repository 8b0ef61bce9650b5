#pragma once

#include <vector>

#include "sinrsim/node_set.hpp"

namespace sinrsim {

/// Assignment of each node to a color (time slot / frequency) in {1..k}.
/// Same-colored nodes transmit concurrently and interfere with each other.
class Coloring {
public:
    enum class Kind {
        regular_1d,  // round-robin on the 1D ordering: color(i) = (i mod k) + 1
        regular_2d,  // k-spaced sublattices of a 2D grid, k*k colors total
        explicit_,   // arbitrary assignment
    };

    Coloring(int num_colors, std::vector<int> colors, Kind kind = Kind::explicit_);

    int num_colors() const { return k_; }
    Kind kind() const { return kind_; }
    std::size_t size() const { return colors_.size(); }

    int color(NodeIndex i) const { return colors_[i - 1]; }
    const std::vector<int>& colors() const { return colors_; }

private:
    int k_;
    std::vector<int> colors_;
    Kind kind_;
};

/// Nodes of each color, ascending node index. Index c-1 holds class c.
std::vector<std::vector<NodeIndex>> color_classes(const Coloring& coloring);

}  // namespace sinrsim
