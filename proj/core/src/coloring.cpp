#include "sinrsim/coloring.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace sinrsim {

Coloring::Coloring(int num_colors, std::vector<int> colors, Kind kind)
    : k_(num_colors), colors_(std::move(colors)), kind_(kind) {
    if (k_ < 1) throw std::invalid_argument("Coloring: k must be positive");
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1 || colors_[i] > k_) {
            throw std::invalid_argument("Coloring: color of node " + std::to_string(i + 1) +
                                        " outside {1.." + std::to_string(k_) + "}");
        }
    }
}

std::vector<std::vector<NodeIndex>> color_classes(const Coloring& coloring) {
    std::vector<std::vector<NodeIndex>> classes(coloring.num_colors());
    for (NodeIndex i = 1; i <= coloring.size(); ++i) {
        classes[coloring.color(i) - 1].push_back(i);
    }
    return classes;
}

}  // namespace sinrsim
