#include <doctest.h>

#include <cmath>

#include "sinrsim/generators.hpp"
#include "sinrsim/profile.hpp"
#include "sinrsim/sinr.hpp"

using namespace sinrsim;
using namespace sinrsim::analysis;

namespace {

// Node index of grid point (x, y) on a side*side grid.
NodeIndex at(std::size_t side, std::size_t x, std::size_t y) { return x * side + y + 1; }

// The sublattice holding (0,0) partitions into L-infinity shells i = 1..imax
// of 2i+1 nodes each; seen from (0,1) a shell-i node is closer than k*i - 1
// never, and farther than sqrt(2)*k*i never. Summing those per-shell bounds
// brackets the true interference of the (0,0) class at (0,1), with the
// (0,0) term itself excluded on both sides.
std::pair<double, double> shell_envelopes(std::size_t side, int k, double alpha) {
    const int shells = static_cast<int>((side - 1) / static_cast<std::size_t>(k));
    double lower = 0.0, upper = 0.0;
    for (int i = 1; i <= shells; ++i) {
        const double nodes_in_shell = 2.0 * i + 1.0;
        lower += nodes_in_shell / std::pow(std::sqrt(2.0) * k * i, alpha);
        upper += nodes_in_shell / std::pow(static_cast<double>(k) * i - 1.0, alpha);
    }
    return {lower, upper};
}

}  // namespace

TEST_CASE("single-member classes contribute exactly their attenuation") {
    const NodeSet nodes = NodeSet::line({0.25, 0.75});  // distance exactly 0.5
    const Coloring coloring(2, {1, 2});
    const SinrParams params(3.0, 1.0);
    const auto profile = interference_profile(nodes, coloring, params, 1);

    REQUIRE(profile.per_class.size() == 2);
    CHECK(profile.per_class[0].members == 0);  // receiver's own class, receiver excluded
    CHECK(profile.per_class[0].total == 0.0);
    CHECK(profile.per_class[1].members == 1);
    CHECK(profile.per_class[1].nearest == 2);
    CHECK(profile.per_class[1].total == attenuation(0.5 * 0.5, 3.0));
    CHECK(profile.per_class[1].interference == 0.0);
    CHECK(profile.max_total == profile.per_class[1].total);
}

TEST_CASE("grid class sums sit between the shell envelopes") {
    const SinrParams params(2.0, 1.0);
    for (std::size_t side : {16, 32}) {
        for (int k : {2, 3, 4}) {
            const NodeSet grid = gen::grid_2d(side * side);
            const Coloring coloring = gen::regular_coloring_2d(side, k);
            const NodeIndex receiver = at(side, 0, 1);
            const auto profile = interference_profile(grid, coloring, params, receiver);

            const int corner_class = coloring.color(at(side, 0, 0));
            const auto& entry = profile.per_class[static_cast<std::size_t>(corner_class) - 1];
            CHECK(entry.nearest == at(side, 0, 0));  // distance 1, lowest index on ties

            const auto [lower, upper] = shell_envelopes(side, k, params.alpha);
            CAPTURE(side);
            CAPTURE(k);
            CHECK(entry.interference > lower);
            CHECK(entry.interference < upper);
        }
    }
}

TEST_CASE("doubling the spacing at matched density scales the field by 4") {
    const SinrParams params(2.0, 1.0);

    const NodeSet small = gen::grid_2d(1024);  // side 32
    const auto small_profile = interference_profile(
        small, gen::regular_coloring_2d(32, 2), params, at(32, 0, 1));
    const NodeSet large = gen::grid_2d(4096);  // side 64, the same layout scaled by 2
    const auto large_profile = interference_profile(
        large, gen::regular_coloring_2d(64, 4), params, at(64, 0, 2));

    const int small_class = gen::regular_coloring_2d(32, 2).color(at(32, 0, 0));
    const int large_class = gen::regular_coloring_2d(64, 4).color(at(64, 0, 0));
    const double small_i =
        small_profile.per_class[static_cast<std::size_t>(small_class) - 1].interference;
    const double large_i =
        large_profile.per_class[static_cast<std::size_t>(large_class) - 1].interference;
    CHECK(small_i == 4.0 * large_i);  // exact: every squared distance scales by 4

    // at fixed n, doubling the spacing sheds at least the 4x envelope factor
    const auto same_n_k2 = interference_profile(
        large, gen::regular_coloring_2d(64, 2), params, at(64, 0, 1));
    const int k2_class = gen::regular_coloring_2d(64, 2).color(at(64, 0, 0));
    const double k2_i = same_n_k2.per_class[static_cast<std::size_t>(k2_class) - 1].interference;
    CHECK(k2_i >= 4.0 * 0.8 * large_i);
}
