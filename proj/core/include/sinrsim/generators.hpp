#pragma once

#include <cstdint>
#include <optional>

#include "sinrsim/coloring.hpp"
#include "sinrsim/node_set.hpp"

namespace sinrsim::gen {

/// Name of the sampling scheme, recorded in experiment metadata so results
/// stay replayable across versions.
inline constexpr const char* rng_id = "splitmix64+mt19937_64/u53 v1";

/// Specification of one seeded random instance. Identical (seed, trial, n)
/// reproduce identical positions bit for bit; the trial substream is derived
/// from (seed, trial) alone.
struct RandomSpec {
    std::size_t n;
    std::uint64_t seed;
    std::uint64_t trial = 0;
};

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t trial, std::uint64_t salt = 0);

/// 1D grid p_i = i for i = 1..n.
NodeSet grid_1d(std::size_t n);

/// 2D grid of n nodes (n must be a perfect square): the lattice
/// {(x, y) : 0 <= x, y <= sqrt(n) - 1} with unit spacing. Node i sits at
/// (x, y) = ((i - 1) / side, (i - 1) % side), so (0, 0) is node 1.
NodeSet grid_2d(std::size_t n);

/// n points drawn independently and uniformly from [0, 1], returned sorted
/// ascending. In the astronomically unlikely event of a duplicate draw the
/// trial is redrawn from a derived substream.
NodeSet sample_uniform_1d(const RandomSpec& spec);

/// Round-robin coloring c(i) = (i mod k) + 1 on 1-based node indices.
Coloring regular_coloring_1d(std::size_t n, int k);

/// Sublattice coloring of a 2D grid with the node order of grid_2d:
/// color(x, y) = (x mod k) * k + (y mod k) + 1, giving k^2 colors whose
/// classes are lattices of spacing k. Requires 1 <= k <= side.
Coloring regular_coloring_2d(std::size_t side, int k);

/// Streams every assignment of n nodes to at most k colors, one
/// representative per equivalence class under color permutation
/// (restricted-growth strings in lexicographic order). Guarded to n <= 10,
/// k <= n; the reception rule only depends on color classes, so this
/// permutation-reduced search is exhaustive for connectivity questions.
class ColoringEnumeration {
public:
    ColoringEnumeration(std::size_t n, int k);
    std::optional<Coloring> next();

private:
    std::size_t n_;
    int k_;
    bool done_ = false;
    bool first_ = true;
    std::vector<int> assignment_;
    std::vector<int> prefix_max_;
};

}  // namespace sinrsim::gen
