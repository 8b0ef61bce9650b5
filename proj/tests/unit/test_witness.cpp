#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "instances.hpp"
#include "sinrsim/generators.hpp"
#include "sinrsim/sinr.hpp"
#include "sinrsim/witness.hpp"

using namespace sinrsim;
using namespace sinrsim::analysis;
using doctest::Approx;

namespace {

// Independent witness validity check: bands, membership exactness, spacing.
void require_valid_expseq(const NodeSet& nodes, const ExpSeqWitness& w) {
    const auto n = static_cast<double>(nodes.size());
    REQUIRE(w.h >= 2);
    REQUIRE(w.indices.size() == static_cast<std::size_t>(w.h));
    REQUIRE(nodes.size() >= (std::size_t{1} << w.h));  // n >= 2^h
    for (int i = 1; i <= w.h; ++i) {
        const double offset = nodes.x(w.indices[static_cast<std::size_t>(i) - 1]) - w.a;
        const double center = std::ldexp(1.0, i) / n;
        REQUIRE(offset >= (1.0 - w.epsilon) * center);
        REQUIRE(offset <= (1.0 + w.epsilon) * center);
    }
    for (int i = 1; i < w.h; ++i) {
        const double gap = nodes.x(w.indices[static_cast<std::size_t>(i)]) -
                           nodes.x(w.indices[static_cast<std::size_t>(i) - 1]);
        const double center = std::ldexp(1.0, i) / n;
        REQUIRE(gap >= (1.0 - 3.0 * w.epsilon) * center);
        REQUIRE(gap <= (1.0 + 3.0 * w.epsilon) * center);
    }
    // V intersected with [a, b] is exactly the witness run
    std::size_t inside = 0;
    for (NodeIndex i = 1; i <= nodes.size(); ++i) {
        if (nodes.x(i) >= w.a && nodes.x(i) <= w.b) ++inside;
    }
    REQUIRE(inside == w.indices.size());
}

}  // namespace

TEST_CASE("gap conditions on a two-node instance") {
    const NodeSet nodes = NodeSet::line({0.05, 0.25});
    std::array<std::size_t, 3> counts{};
    CHECK(gap_conditions_hold(nodes, 0.0, 0.1, 1, 4.0, &counts));
    CHECK(counts == std::array<std::size_t, 3>{1, 0, 1});

    const auto witness = detect_gap_condition(nodes, 1, 4.0);
    REQUIRE(witness.has_value());
    CHECK(gap_conditions_hold(nodes, witness->x, witness->ell, 1, 4.0));

    CHECK_THROWS_AS(detect_gap_condition(nodes, 0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(detect_gap_condition(nodes, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(detect_gap_condition(gen::grid_1d(4), 1, 1.0), std::invalid_argument);
}

TEST_CASE("equally spaced nodes admit no wide gap window") {
    std::vector<double> xs(100);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i) / 99.0;
    const NodeSet nodes = NodeSet::line(std::move(xs));

    // the widest hole between nodes is 1/99 < 0.02, so no middle interval of
    // length >= 0.02 can be empty
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        CHECK(nodes.x(i + 1) - nodes.x(i) < 0.02);
    }
    const auto witness = detect_gap_condition(nodes, 1, 4.0);
    if (witness) {
        CHECK(witness->ell < 0.02);
        CHECK(gap_conditions_hold(nodes, witness->x, witness->ell, 1, 4.0));
    }
}

TEST_CASE("gap detector is deterministic and its witnesses are sound") {
    std::mt19937_64 eng(4242);
    int fired = 0;
    for (int rep = 0; rep < 120; ++rep) {
        const std::size_t n = 200 + (eng() % 2) * 200;
        const int k = 1 + static_cast<int>(eng() % 3);
        const double beta = (eng() % 2) ? 1.0 : 2.0;
        const NodeSet nodes = testsupport::random_line(n, eng);

        const auto witness = detect_gap_condition(nodes, k, beta);
        const auto again = detect_gap_condition(nodes, k, beta);
        CHECK(witness.has_value() == again.has_value());
        if (!witness) continue;
        CHECK(witness->x == again->x);
        CHECK(witness->ell == again->ell);
        CHECK(gap_conditions_hold(nodes, witness->x, witness->ell, k, beta));

        const double canonical = 4.0 / beta * static_cast<double>(k) / static_cast<double>(n);
        if (witness->ell >= canonical) {
            ++fired;
            CHECK_FALSE(is_connected(nodes, gen::regular_coloring_1d(n, k),
                                     SinrParams(2.0, beta)));
        }
    }
    CHECK(fired > 10);  // the sweep must actually exercise the disconnection bound
}

TEST_CASE("gamma threshold") {
    const SinrParams params(2.0, 1.0);
    CHECK(gamma_threshold(params, 1e-12) == Approx(0.2).epsilon(1e-9));
    CHECK(gamma_threshold(params, 0.1) == Approx(49.0 / 373.0).epsilon(1e-12));

    CHECK_THROWS_AS(gamma_threshold(params, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_threshold(params, 1.0 / 3.0), std::invalid_argument);

    double previous = 1.0;
    for (double eps = 0.01; eps < 1.0 / 3.0; eps += 0.02) {
        const double gamma = gamma_threshold(params, eps);
        CHECK(gamma > 0.0);
        CHECK(gamma < 1.0);
        CHECK(gamma < previous);  // strictly decreasing in epsilon
        previous = gamma;
        CHECK(gamma_threshold(params, eps, GammaVariant::statement) >= gamma);
    }
    previous = 1.0;
    for (double alpha : {1.0, 1.5, 2.0, 3.0, 4.0}) {
        const double gamma = gamma_threshold(SinrParams(alpha, 1.0), 0.1);
        CHECK(gamma < previous);  // strictly decreasing in alpha
        previous = gamma;
    }
}

TEST_CASE("exponential sequence detection on exact midpoints") {
    // q_i = 2^i/16 for i = 1..3; everything else far to the right
    std::vector<double> xs = {0.125, 0.25, 0.5};
    for (int i = 0; i < 13; ++i) xs.push_back(0.66 + 0.005 * static_cast<double>(i));
    const NodeSet nodes = NodeSet::line(std::move(xs));

    const auto witness = detect_exponential_sequence(nodes, 0.25, 3);
    REQUIRE(witness.has_value());
    CHECK(witness->h == 3);
    CHECK(std::abs(witness->a) < 1e-15);
    CHECK(witness->indices == std::vector<NodeIndex>{1, 2, 3});
    require_valid_expseq(nodes, *witness);

    CHECK_THROWS_AS(detect_exponential_sequence(nodes, 0.4, 3), std::invalid_argument);
    CHECK_THROWS_AS(detect_exponential_sequence(nodes, 0.25, 1), std::invalid_argument);
    CHECK_THROWS_AS(detect_exponential_sequence(nodes, 0.25, 5), std::invalid_argument);
}

TEST_CASE("equally spaced nodes contain no exponential sequence") {
    // consecutive gaps must nearly double inside a run; equal spacing cannot
    std::vector<double> xs(64);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i) / 63.0;
    const NodeSet nodes = NodeSet::line(std::move(xs));

    const double eps = 0.05;
    const double min_ratio = 2.0 * (1.0 - 3.0 * eps) / (1.0 + 3.0 * eps);
    REQUIRE(min_ratio > 1.0);
    for (std::size_t i = 2; i < nodes.size(); ++i) {
        const double g1 = nodes.x(i) - nodes.x(i - 1);
        const double g2 = nodes.x(i + 1) - nodes.x(i);
        CHECK(g2 / g1 < min_ratio);  // no room for a length-3 band run
    }
    CHECK_FALSE(detect_exponential_sequence(nodes, eps, 3).has_value());
}

TEST_CASE("planted sequences are found and force disconnection") {
    std::mt19937_64 eng(616);
    for (int rep = 0; rep < 40; ++rep) {
        const bool small = rep % 2 == 0;
        const std::size_t n = small ? 128 : 512;
        const int h = small ? 5 : 7;
        const double beta = small ? 4.0 : 2.0;
        const int k = 2;
        const double eps = 0.02;

        const double anchor = 0.05 + 0.02 * testsupport::u01(eng);
        const auto planted = testsupport::plant_exponential(n, h, anchor, eng);
        const auto witness = detect_exponential_sequence(planted.nodes, eps, h);
        REQUIRE(witness.has_value());
        CHECK(witness->h >= h);
        require_valid_expseq(planted.nodes, *witness);

        const SinrParams params(2.0, beta);
        const double gamma = gamma_threshold(params, eps);
        REQUIRE(static_cast<double>(k) < gamma * witness->h);
        const Coloring coloring = testsupport::random_coloring(n, k, eng);
        CHECK_FALSE(is_connected(planted.nodes, coloring, params));
    }
}
