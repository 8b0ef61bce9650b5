#include "sinrsim/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sinrsim {

SinrGraph::SinrGraph(std::size_t n) : n_(n), out_(n) {
    if (n == 0) throw std::invalid_argument("SinrGraph: need at least one node");
}

SinrGraph::SinrGraph(std::size_t n, std::vector<std::pair<NodeIndex, NodeIndex>> edges)
    : SinrGraph(n) {
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw std::out_of_range("SinrGraph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("SinrGraph: self-loop rejected");
        out_[u - 1].push_back(v);
    }
    for (auto& list : out_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
}

void SinrGraph::set_out_neighbors(NodeIndex u, std::vector<NodeIndex> neighbors) {
    edge_count_ -= out_[u - 1].size();
    out_[u - 1] = std::move(neighbors);
    edge_count_ += out_[u - 1].size();
}

bool SinrGraph::has_edge(NodeIndex u, NodeIndex v) const {
    const auto& list = out_[u - 1];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<NodeIndex, NodeIndex>> SinrGraph::edges() const {
    std::vector<std::pair<NodeIndex, NodeIndex>> result;
    result.reserve(edge_count_);
    for (NodeIndex u = 1; u <= n_; ++u) {
        for (NodeIndex v : out_[u - 1]) result.emplace_back(u, v);
    }
    return result;
}

namespace {

std::size_t bfs_reach(const std::vector<std::vector<NodeIndex>>& adj, std::size_t n) {
    std::vector<char> seen(n + 1, 0);
    std::vector<NodeIndex> queue;
    queue.reserve(n);
    queue.push_back(1);
    seen[1] = 1;
    std::size_t reached = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeIndex u = queue[head];
        ++reached;
        for (NodeIndex v : adj[u - 1]) {
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return reached;
}

}  // namespace

bool is_strongly_connected(const SinrGraph& graph) {
    const std::size_t n = graph.node_count();
    if (n <= 1) return true;

    std::vector<std::vector<NodeIndex>> forward(n), reverse(n);
    for (NodeIndex u = 1; u <= n; ++u) {
        for (NodeIndex v : graph.out_neighbors(u)) {
            forward[u - 1].push_back(v);
            reverse[v - 1].push_back(u);
        }
    }
    return bfs_reach(forward, n) == n && bfs_reach(reverse, n) == n;
}

}  // namespace sinrsim
