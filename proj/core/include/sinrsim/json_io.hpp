#pragma once

#include <string>

#include "sinrsim/coloring.hpp"
#include "sinrsim/graph.hpp"
#include "sinrsim/node_set.hpp"

namespace sinrsim {

// Wire formats:
//   node set:  {"dimension": d, "positions": [[x], [x, y], ...]}
//   coloring:  {"k": k, "colors": [c_1, ..., c_n]}   (loads as explicit kind)
//   graph:     {"n": n, "edges": [[u, v], ...]}      (1-based, lexicographic)

std::string to_json(const NodeSet& nodes);
std::string to_json(const Coloring& coloring);
std::string to_json(const SinrGraph& graph);

NodeSet node_set_from_json(const std::string& text);
Coloring coloring_from_json(const std::string& text);
SinrGraph graph_from_json(const std::string& text);

}  // namespace sinrsim
