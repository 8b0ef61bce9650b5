#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sinrsim/node_set.hpp"
#include "sinrsim/params.hpp"

namespace sinrsim::analysis {

/// Disconnection evidence for a regular coloring at alpha = 2: a window of
/// three consecutive length-ell intervals that is dense, then empty, then
/// occupied. Whenever such a window exists the SINR graph under a regular
/// k-coloring is not strongly connected.
struct GapWitness {
    double x = 0.0;
    double ell = 0.0;
    /// Nodes in [x, x+ell], (x+ell, x+2ell), [x+2ell, x+3ell].
    std::array<std::size_t, 3> counts{0, 0, 0};
};

/// Checks the three gap conditions at a specific window: at least (4/beta)k
/// nodes in [x, x+ell], none in the open middle interval, at least one in
/// the final interval; requires 0 < ell < 1/3 and x in [0, 1-3ell].
bool gap_conditions_hold(const NodeSet& nodes, double x, double ell, int k, double beta,
                         std::array<std::size_t, 3>* counts = nullptr);

/// Scans windows anchored at node positions (plus the origin) with lengths
/// on a geometric grid from 1/n to 1/3 (ratio 1.1) together with the
/// canonical ell = (4/beta)(k/n); longer windows are tried first. Sound but
/// not exhaustive: a returned witness always satisfies the conditions, a
/// miss does not prove absence. Nodes must be 1D within [0, 1].
std::optional<GapWitness> detect_gap_condition(const NodeSet& nodes, int k, double beta);

enum class GammaVariant {
    proof,      // (1 + (1+eps)/(1-3eps))^alpha in the denominator
    statement,  // (1 + (1-eps)/(1-3eps))^alpha
};

/// Fraction gamma of an exponential sequence's length below which k colors
/// cannot keep the SINR graph strongly connected: with a witness of length
/// h and k < gamma * h colors the graph is provably disconnected. The proof
/// variant (default) is the smaller, safe threshold; the statement variant
/// is exposed for side-by-side comparison.
double gamma_threshold(const SinrParams& params, double epsilon,
                       GammaVariant variant = GammaVariant::proof);

/// A run of consecutive nodes q_1..q_h whose offsets from an anchor a
/// double geometrically: (1-eps) 2^i/n <= q_i - a <= (1+eps) 2^i/n, with
/// no other node inside [a, b] and n >= 2^h.
struct ExpSeqWitness {
    double a = 0.0;
    double b = 0.0;
    std::vector<NodeIndex> indices;  // q_1..q_h, ascending
    double epsilon = 0.0;
    int h = 0;
};

/// Searches for the longest exponential sequence of length at least h_min,
/// anchoring candidate intervals at each node's band-1 offsets. A witness
/// is only returned if the node following the run (when one exists) is at
/// least (1-3eps) 2^h/n away, so the run's rightmost node keeps the spacing
/// bound on both sides regardless of where the sequence's colors fall.
/// Requires 0 < eps < 1/3, h_min >= 2, n >= 2^h_min, nodes 1D in [0, 1].
std::optional<ExpSeqWitness> detect_exponential_sequence(const NodeSet& nodes, double epsilon,
                                                         int h_min);

}  // namespace sinrsim::analysis
