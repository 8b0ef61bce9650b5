#include "sinrsim/json_io.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace sinrsim {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

}  // namespace

std::string to_json(const NodeSet& nodes) {
    json positions = json::array();
    for (NodeIndex i = 1; i <= nodes.size(); ++i) {
        if (nodes.dimension() == 1) {
            positions.push_back({nodes.x(i)});
        } else {
            positions.push_back({nodes.x(i), nodes.y(i)});
        }
    }
    return json{{"dimension", nodes.dimension()}, {"positions", std::move(positions)}}.dump();
}

std::string to_json(const Coloring& coloring) {
    return json{{"k", coloring.num_colors()}, {"colors", coloring.colors()}}.dump();
}

std::string to_json(const SinrGraph& graph) {
    json edges = json::array();
    for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
    return json{{"n", graph.node_count()}, {"edges", std::move(edges)}}.dump();
}

NodeSet node_set_from_json(const std::string& text) {
    const json j = parse(text, "node set");
    const int dimension = j.at("dimension").get<int>();
    if (dimension != 1 && dimension != 2) {
        throw std::invalid_argument("node set: dimension must be 1 or 2");
    }
    std::vector<double> xs, ys;
    for (const auto& p : j.at("positions")) {
        if (!p.is_array() || p.size() != static_cast<std::size_t>(dimension)) {
            throw std::invalid_argument("node set: position arity does not match dimension");
        }
        xs.push_back(p.at(0).get<double>());
        if (dimension == 2) ys.push_back(p.at(1).get<double>());
    }
    return dimension == 1 ? NodeSet::line(std::move(xs))
                          : NodeSet::plane(std::move(xs), std::move(ys));
}

Coloring coloring_from_json(const std::string& text) {
    const json j = parse(text, "coloring");
    return Coloring(j.at("k").get<int>(), j.at("colors").get<std::vector<int>>(),
                    Coloring::Kind::explicit_);
}

SinrGraph graph_from_json(const std::string& text) {
    const json j = parse(text, "graph");
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<NodeIndex>(), e.at(1).get<NodeIndex>());
    }
    return SinrGraph(j.at("n").get<std::size_t>(), std::move(edges));
}

}  // namespace sinrsim
