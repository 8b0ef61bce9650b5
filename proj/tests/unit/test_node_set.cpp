#include <doctest.h>

#include <random>
#include <stdexcept>

#include "instances.hpp"
#include "sinrsim/generators.hpp"
#include "sinrsim/json_io.hpp"
#include "sinrsim/node_set.hpp"

using namespace sinrsim;

TEST_CASE("distance on grids") {
    const NodeSet line = gen::grid_1d(3);
    CHECK(line.distance(1, 2) == 1.0);
    CHECK(line.distance(2, 1) == 1.0);
    CHECK(line.distance(1, 1) == 0.0);

    const NodeSet plane = gen::grid_2d(25);  // side 5, node (x, y) at x*5 + y + 1
    const NodeIndex origin = 1;              // (0, 0)
    const NodeIndex corner = 3 * 5 + 4 + 1;  // (3, 4)
    CHECK(plane.distance(origin, corner) == 5.0);
    CHECK(plane.distance(corner, corner) == 0.0);

    CHECK_THROWS_AS((void)line.distance(0, 1), std::out_of_range);
    CHECK_THROWS_AS((void)line.distance(1, 4), std::out_of_range);
}

TEST_CASE("distance is a metric on random triples") {
    std::mt19937_64 eng(2026);
    for (int rep = 0; rep < 50; ++rep) {
        const NodeSet nodes =
            rep % 2 == 0 ? testsupport::random_line(8, eng) : testsupport::random_plane(8, eng);
        for (NodeIndex u = 1; u <= 8; ++u) {
            for (NodeIndex v = 1; v <= 8; ++v) {
                CHECK(nodes.distance(u, v) >= 0.0);
                CHECK(nodes.distance(u, v) == nodes.distance(v, u));
                CHECK((nodes.distance(u, v) == 0.0) == (u == v));
                for (NodeIndex w = 1; w <= 8; ++w) {
                    CHECK(nodes.distance(u, w) <=
                          nodes.distance(u, v) + nodes.distance(v, w) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("validation reports") {
    auto dup = NodeSet::validate(1, {0.1, 0.1});
    REQUIRE_FALSE(dup.ok());
    CHECK(dup.violations.front().kind == Violation::Kind::duplicate_position);

    auto unsorted = NodeSet::validate(1, {0.3, 0.1});
    REQUIRE_FALSE(unsorted.ok());
    CHECK(unsorted.violations.front().kind == Violation::Kind::unsorted_1d);

    CHECK(NodeSet::validate(1, {1.0, 2.0, 3.0}).ok());
    CHECK_FALSE(NodeSet::validate(2, {0.0, 0.0}, {1.0, 1.0}).ok());

    CHECK_THROWS_AS(NodeSet::line({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(NodeSet::line({0.5, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(NodeSet::plane({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("json round trips") {
    std::mt19937_64 eng(7);
    const NodeSet line = testsupport::random_line(6, eng);
    const NodeSet back = node_set_from_json(to_json(line));
    CHECK(back.dimension() == 1);
    REQUIRE(back.size() == line.size());
    for (NodeIndex i = 1; i <= line.size(); ++i) CHECK(back.x(i) == line.x(i));

    const NodeSet plane = testsupport::random_plane(5, eng);
    const NodeSet plane_back = node_set_from_json(to_json(plane));
    for (NodeIndex i = 1; i <= plane.size(); ++i) {
        CHECK(plane_back.x(i) == plane.x(i));
        CHECK(plane_back.y(i) == plane.y(i));
    }

    const Coloring coloring = testsupport::random_coloring(6, 3, eng);
    const Coloring coloring_back = coloring_from_json(to_json(coloring));
    CHECK(coloring_back.num_colors() == coloring.num_colors());
    CHECK(coloring_back.colors() == coloring.colors());

    const SinrGraph graph(3, {{1, 2}, {2, 3}, {3, 1}});
    const SinrGraph graph_back = graph_from_json(to_json(graph));
    CHECK(graph_back.node_count() == 3);
    CHECK(graph_back.edges() == graph.edges());
}
