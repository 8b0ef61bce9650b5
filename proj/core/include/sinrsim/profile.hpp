#pragma once

#include <vector>

#include "sinrsim/coloring.hpp"
#include "sinrsim/node_set.hpp"
#include "sinrsim/params.hpp"

namespace sinrsim::analysis {

/// Field strength one color class produces at a receiver.
struct ClassInterference {
    int color = 0;
    std::size_t members = 0;  // class members other than the receiver
    /// Class member closest to the receiver (ties break to the lowest
    /// index), i.e. the natural sender of this class; 0 if none.
    NodeIndex nearest = 0;
    double nearest_term = 0.0;
    /// Sum of 1/d^alpha over all members (receiver excluded).
    double total = 0.0;
    /// total minus the nearest member's term: the interference a
    /// transmission from the nearest member would suffer at the receiver.
    double interference = 0.0;
};

struct InterferenceProfile {
    NodeIndex receiver = 0;
    std::vector<ClassInterference> per_class;  // ascending color
    double max_total = 0.0;
    double max_interference = 0.0;
};

/// Per-color interference sums at one receiver, in ascending node-index
/// order within each class. The receiver never contributes to any sum.
InterferenceProfile interference_profile(const NodeSet& nodes, const Coloring& coloring,
                                         const SinrParams& params, NodeIndex receiver);

}  // namespace sinrsim::analysis
