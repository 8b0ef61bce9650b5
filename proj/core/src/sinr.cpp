#include "sinrsim/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sinrsim/detail/parallel.hpp"

namespace sinrsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Safety factor on the early-exit threshold so that an aborted sum and the
// completed sum can never disagree about the edge decision.
constexpr double kExitSlack = 1.0 + 1e-12;

double pow_positive_int(double base, int e) {
    double result = 1.0;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

void check_index(const NodeSet& nodes, NodeIndex i, const char* what) {
    if (i < 1 || i > nodes.size()) {
        throw std::out_of_range(std::string(what) + " index out of range");
    }
}

// Everything the per-pair edge decision needs, precomputed once per build.
struct EdgeContext {
    const NodeSet& nodes;
    const Coloring& coloring;
    double alpha;
    double beta;
    double beta_floor;  // beta * (1 - edge_tolerance)
    std::vector<std::vector<NodeIndex>> classes;

    // 1D: per-class positions in ascending order (class indices already are).
    std::vector<std::vector<double>> class_positions;

    // 2D canonical grid (positions (x, y) = ((i-1) / side, (i-1) % side))
    // under a regular k^2-coloring: same-color nodes form a sublattice, so
    // the strongest interferer can be located in O(1).
    bool lattice = false;
    int side = 0;
    int spacing = 0;

    EdgeContext(const NodeSet& ns, const Coloring& col, const SinrParams& params)
        : nodes(ns),
          coloring(col),
          alpha(params.alpha),
          beta(params.beta),
          beta_floor(params.beta * (1.0 - edge_tolerance)),
          classes(color_classes(col)) {
        if (ns.dimension() == 1) {
            class_positions.resize(classes.size());
            for (std::size_t c = 0; c < classes.size(); ++c) {
                class_positions[c].reserve(classes[c].size());
                for (NodeIndex w : classes[c]) class_positions[c].push_back(ns.x(w));
            }
        } else if (col.kind() == Coloring::Kind::regular_2d) {
            const auto s = static_cast<int>(std::lround(std::sqrt(double(col.num_colors()))));
            const auto sd = static_cast<int>(std::lround(std::sqrt(double(ns.size()))));
            if (s * s == col.num_colors() &&
                static_cast<std::size_t>(sd) * sd == ns.size() && canonical_grid(ns, sd)) {
                lattice = true;
                side = sd;
                spacing = s;
            }
        }
    }

    static bool canonical_grid(const NodeSet& ns, int sd) {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            if (ns.xs()[i] != double(i / static_cast<std::size_t>(sd)) ||
                ns.ys()[i] != double(i % static_cast<std::size_t>(sd))) {
                return false;
            }
        }
        return true;
    }

    double dist_squared_raw(std::size_t w0, double rx, double ry) const {
        const double dx = nodes.xs()[w0] - rx;
        if (nodes.dimension() == 1) return dx * dx;
        const double dy = nodes.ys()[w0] - ry;
        return dx * dx + dy * dy;
    }

    // Lower bound on the interference: the strongest single interferer of
    // class c at the receiver, excluding `skip`. Returns 0 if none found.
    double strongest_term(int c, NodeIndex skip, NodeIndex receiver, double rx, double ry) const {
        const auto& cls = classes[static_cast<std::size_t>(c) - 1];
        if (nodes.dimension() == 1) {
            const auto& pos = class_positions[static_cast<std::size_t>(c) - 1];
            auto it = std::lower_bound(pos.begin(), pos.end(), rx);
            double best = 0.0;
            const auto probe = [&](std::ptrdiff_t j) {
                if (j < 0 || j >= static_cast<std::ptrdiff_t>(pos.size())) return;
                const NodeIndex w = cls[static_cast<std::size_t>(j)];
                if (w == skip) return;
                const double dx = pos[static_cast<std::size_t>(j)] - rx;
                best = std::max(best, attenuation(dx * dx, alpha));
            };
            const std::ptrdiff_t at = it - pos.begin();
            probe(at - 2);
            probe(at - 1);
            probe(at);
            probe(at + 1);
            return best;
        }
        if (lattice) {
            const int c0 = c - 1;
            const int ax = c0 / spacing;
            const int ay = c0 % spacing;
            const auto snap = [&](double r, int anchor) {
                const int cells = (side - 1 - anchor) / spacing;
                int cell = static_cast<int>(std::lround((r - anchor) / spacing));
                return std::clamp(cell, 0, cells);
            };
            const int ci = snap(rx, ax);
            const int cj = snap(ry, ay);
            double best = 0.0;
            for (int di = -1; di <= 1; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    const int i = ci + di;
                    const int j = cj + dj;
                    const int wx = ax + i * spacing;
                    const int wy = ay + j * spacing;
                    if (i < 0 || j < 0 || wx >= side || wy >= side) continue;
                    const NodeIndex w =
                        static_cast<NodeIndex>(wx) * static_cast<NodeIndex>(side) +
                        static_cast<NodeIndex>(wy) + 1;
                    if (w == skip || w == receiver) continue;
                    const double dx = wx - rx;
                    const double dy = wy - ry;
                    best = std::max(best, attenuation(dx * dx + dy * dy, alpha));
                }
            }
            return best;
        }
        return 0.0;
    }

    // Decides (u, v) exactly as sinr_edge does. Early exits are taken only
    // when the completed sum would provably decide the same way: partial
    // sums of nonnegative terms are monotone, so once a prefix (or a single
    // term) exceeds the threshold with slack, the pair cannot be an edge.
    bool decide_edge(NodeIndex u, NodeIndex v, BuildStats* stats) const {
        const int cu = coloring.color(u);
        if (coloring.color(v) == cu) return false;  // receiver co-transmits

        const double rx = nodes.xs()[v - 1];
        const double ry = nodes.dimension() == 2 ? nodes.ys()[v - 1] : 0.0;
        const double signal = attenuation(dist_squared_raw(u - 1, rx, ry), alpha);
        const double limit = signal / beta_floor;
        const double limit_safe = limit * kExitSlack;

        if (strongest_term(cu, u, v, rx, ry) > limit_safe) return false;

        double sum = 0.0;
        for (NodeIndex w : classes[static_cast<std::size_t>(cu) - 1]) {
            if (w == u) continue;
            sum += attenuation(dist_squared_raw(w - 1, rx, ry), alpha);
            if (sum > limit_safe) return false;
        }
        if (sum == 0.0) return true;
        const double ratio = signal / sum;
        if (stats && std::abs(ratio - beta) <= beta * edge_tolerance) {
            stats->near_ties.fetch_add(1, std::memory_order_relaxed);
        }
        return ratio >= beta_floor;
    }
};

void require_matching_coloring(const NodeSet& nodes, const Coloring& coloring) {
    if (nodes.size() != coloring.size()) {
        throw std::invalid_argument("coloring covers " + std::to_string(coloring.size()) +
                                    " nodes, node set has " + std::to_string(nodes.size()));
    }
}

}  // namespace

double attenuation(double dist_squared, double alpha) {
    const double floor_alpha = std::floor(alpha);
    if (alpha == floor_alpha && alpha <= 64.0) {
        const int m = static_cast<int>(floor_alpha);
        const double even_part = pow_positive_int(dist_squared, m / 2);
        if (m % 2 == 0) return 1.0 / even_part;
        return 1.0 / (even_part * std::sqrt(dist_squared));
    }
    return std::exp(-0.5 * alpha * std::log(dist_squared));
}

double interference_at(const NodeSet& nodes, const Coloring& coloring, NodeIndex sender,
                       NodeIndex receiver, const SinrParams& params) {
    require_matching_coloring(nodes, coloring);
    check_index(nodes, sender, "sender");
    check_index(nodes, receiver, "receiver");
    if (sender == receiver) throw std::invalid_argument("interference_at: sender == receiver");

    const int cu = coloring.color(sender);
    double sum = 0.0;
    for (NodeIndex w = 1; w <= nodes.size(); ++w) {
        if (w == sender || coloring.color(w) != cu) continue;
        if (w == receiver) return kInf;  // d = 0 term
        sum += attenuation(nodes.distance_squared(w, receiver), params.alpha);
    }
    return sum;
}

EdgeEvaluation sinr_edge(const NodeSet& nodes, const Coloring& coloring, NodeIndex sender,
                         NodeIndex receiver, const SinrParams& params) {
    EdgeEvaluation eval;
    eval.sender = sender;
    eval.receiver = receiver;
    eval.signal = attenuation(nodes.distance_squared(sender, receiver), params.alpha);
    eval.interference = interference_at(nodes, coloring, sender, receiver, params);
    if (eval.interference == 0.0) {
        eval.ratio = kInf;
        eval.is_edge = true;
        return eval;
    }
    eval.ratio = eval.signal / eval.interference;
    eval.is_edge = eval.ratio >= params.beta * (1.0 - edge_tolerance);
    eval.near_tie = std::isfinite(eval.ratio) &&
                    std::abs(eval.ratio - params.beta) <= params.beta * edge_tolerance;
    return eval;
}

namespace {

// Shared by build_graph and is_connected. Returns false only when
// abort_on_isolated is set and some node was found without outgoing edges.
bool edge_kernel(const EdgeContext& ctx, int threads, bool abort_on_isolated,
                 std::vector<std::vector<NodeIndex>>& out, BuildStats* stats) {
    const std::size_t n = ctx.nodes.size();
    out.assign(n, {});
    std::atomic<bool> isolated{false};
    detail::parallel_for(n, threads, [&](std::size_t s) {
        if (abort_on_isolated && isolated.load(std::memory_order_relaxed)) return;
        const NodeIndex u = s + 1;
        auto& list = out[s];
        for (NodeIndex v = 1; v <= n; ++v) {
            if (v == u) continue;
            if (ctx.decide_edge(u, v, stats)) list.push_back(v);
        }
        if (list.empty() && n > 1) isolated.store(true, std::memory_order_relaxed);
    });
    return !(abort_on_isolated && isolated.load());
}

}  // namespace

SinrGraph build_graph(const NodeSet& nodes, const Coloring& coloring, const SinrParams& params,
                      int threads, BuildStats* stats) {
    require_matching_coloring(nodes, coloring);
    EdgeContext ctx(nodes, coloring, params);
    std::vector<std::vector<NodeIndex>> out;
    edge_kernel(ctx, threads, false, out, stats);
    SinrGraph graph(nodes.size());
    for (NodeIndex u = 1; u <= nodes.size(); ++u) {
        graph.set_out_neighbors(u, std::move(out[u - 1]));
    }
    return graph;
}

bool is_connected(const NodeSet& nodes, const Coloring& coloring, const SinrParams& params,
                  int threads) {
    require_matching_coloring(nodes, coloring);
    if (nodes.size() == 1) return true;
    EdgeContext ctx(nodes, coloring, params);
    std::vector<std::vector<NodeIndex>> out;
    if (!edge_kernel(ctx, threads, true, out, nullptr)) return false;
    SinrGraph graph(nodes.size());
    for (NodeIndex u = 1; u <= nodes.size(); ++u) {
        graph.set_out_neighbors(u, std::move(out[u - 1]));
    }
    return is_strongly_connected(graph);
}

}  // namespace sinrsim
