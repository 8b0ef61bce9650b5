#include "sinrsim/profile.hpp"

#include <algorithm>
#include <stdexcept>

#include "sinrsim/sinr.hpp"

namespace sinrsim::analysis {

InterferenceProfile interference_profile(const NodeSet& nodes, const Coloring& coloring,
                                         const SinrParams& params, NodeIndex receiver) {
    if (nodes.size() != coloring.size()) {
        throw std::invalid_argument("interference_profile: coloring/node-count mismatch");
    }
    if (receiver < 1 || receiver > nodes.size()) {
        throw std::out_of_range("interference_profile: receiver out of range");
    }

    InterferenceProfile profile;
    profile.receiver = receiver;
    profile.per_class.resize(static_cast<std::size_t>(coloring.num_colors()));
    for (int c = 1; c <= coloring.num_colors(); ++c) {
        profile.per_class[static_cast<std::size_t>(c) - 1].color = c;
    }

    for (NodeIndex w = 1; w <= nodes.size(); ++w) {
        if (w == receiver) continue;
        auto& entry = profile.per_class[static_cast<std::size_t>(coloring.color(w)) - 1];
        const double term = attenuation(nodes.distance_squared(w, receiver), params.alpha);
        entry.total += term;
        ++entry.members;
        if (term > entry.nearest_term) {
            entry.nearest_term = term;
            entry.nearest = w;
        }
    }

    for (auto& entry : profile.per_class) {
        entry.interference = entry.members > 1 ? entry.total - entry.nearest_term : 0.0;
        profile.max_total = std::max(profile.max_total, entry.total);
        profile.max_interference = std::max(profile.max_interference, entry.interference);
    }
    return profile;
}

}  // namespace sinrsim::analysis
