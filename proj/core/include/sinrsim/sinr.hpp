#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>

#include "sinrsim/coloring.hpp"
#include "sinrsim/graph.hpp"
#include "sinrsim/node_set.hpp"
#include "sinrsim/params.hpp"

namespace sinrsim {

/// Relative tolerance of the reception-threshold comparison: a ratio of at
/// least beta * (1 - edge_tolerance) counts as an edge. Grid symmetries
/// produce exact ties at the threshold; the tolerance pins their behavior.
inline constexpr double edge_tolerance = 1e-9;

/// 1/d^alpha computed from the squared distance. Integer exponents use
/// repeated multiplication, non-integer ones go through exp/log.
/// attenuation(0, alpha) is +infinity.
double attenuation(double dist_squared, double alpha);

struct EdgeEvaluation {
    NodeIndex sender = 0;
    NodeIndex receiver = 0;
    double signal = 0.0;
    double interference = 0.0;  // +infinity when the receiver co-transmits
    double ratio = 0.0;         // +infinity when interference is zero
    bool is_edge = false;
    bool near_tie = false;  // ratio within +-edge_tolerance of beta
};

/// Total interference a transmission from `sender` suffers at `receiver`:
/// the sum of 1/d(w, receiver)^alpha over every other node w sharing the
/// sender's color. The receiver itself is such a node when it shares the
/// color, contributing a d = 0 term, so the result is +infinity then.
/// Terms are added in ascending node-index order.
double interference_at(const NodeSet& nodes, const Coloring& coloring, NodeIndex sender,
                       NodeIndex receiver, const SinrParams& params);

/// Evaluates the reception rule for one ordered pair. Zero interference
/// yields an edge (ratio +infinity).
EdgeEvaluation sinr_edge(const NodeSet& nodes, const Coloring& coloring, NodeIndex sender,
                         NodeIndex receiver, const SinrParams& params);

struct BuildStats {
    std::atomic<std::size_t> near_ties{0};
};

/// The directed SINR graph: edge (u, v) present iff sinr_edge(u, v).is_edge.
/// Senders may be evaluated in parallel; the result is identical for any
/// thread count (each pair is decided independently and summation order
/// within a pair is fixed). threads = 0 picks the hardware default.
SinrGraph build_graph(const NodeSet& nodes, const Coloring& coloring, const SinrParams& params,
                      int threads = 0, BuildStats* stats = nullptr);

/// Equivalent to is_strongly_connected(build_graph(...)) but abandons the
/// build as soon as some node provably has no outgoing edge.
bool is_connected(const NodeSet& nodes, const Coloring& coloring, const SinrParams& params,
                  int threads = 0);

}  // namespace sinrsim
