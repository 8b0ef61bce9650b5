#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sinrsim/node_set.hpp"

namespace sinrsim {

/// Directed graph over nodes 1..n, no self-loops. Adjacency lists are kept
/// sorted ascending so edge iteration order is deterministic.
class SinrGraph {
public:
    explicit SinrGraph(std::size_t n);
    SinrGraph(std::size_t n, std::vector<std::pair<NodeIndex, NodeIndex>> edges);

    std::size_t node_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool has_edge(NodeIndex u, NodeIndex v) const;
    const std::vector<NodeIndex>& out_neighbors(NodeIndex u) const { return out_[u - 1]; }

    /// Edges in lexicographic (u, v) order.
    std::vector<std::pair<NodeIndex, NodeIndex>> edges() const;

    /// Takes ownership of a sorted out-neighbor list for node u.
    void set_out_neighbors(NodeIndex u, std::vector<NodeIndex> neighbors);

private:
    std::size_t n_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<NodeIndex>> out_;
};

/// True iff every ordered pair of nodes is joined by a directed path.
/// A single node is strongly connected. Runs two breadth-first searches,
/// one on the graph and one on its reverse.
bool is_strongly_connected(const SinrGraph& graph);

}  // namespace sinrsim
