#include "sinrsim/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sinrsim::gen {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// 53 random bits mapped to [0, 1).
double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t trial, std::uint64_t salt) {
    std::uint64_t state = seed;
    std::uint64_t mixed = splitmix64(state);
    state ^= trial * 0xD1342543DE82EF95ULL;
    mixed ^= splitmix64(state);
    state ^= salt * 0xDB4F0B9175AE2165ULL;
    mixed ^= splitmix64(state);
    return mixed;
}

NodeSet grid_1d(std::size_t n) {
    if (n == 0) throw std::invalid_argument("grid_1d: n must be positive");
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i + 1);
    return NodeSet::line(std::move(xs));
}

NodeSet grid_2d(std::size_t n) {
    if (n == 0) throw std::invalid_argument("grid_2d: n must be positive");
    const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    if (side * side != n) {
        throw std::invalid_argument("grid_2d: n = " + std::to_string(n) +
                                    " is not a perfect square");
    }
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = static_cast<double>(i / side);
        ys[i] = static_cast<double>(i % side);
    }
    return NodeSet::plane(std::move(xs), std::move(ys));
}

NodeSet sample_uniform_1d(const RandomSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("sample_uniform_1d: n must be positive");
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 engine(derive_stream(spec.seed, spec.trial, attempt));
        std::vector<double> xs(spec.n);
        for (auto& x : xs) x = uniform01(engine);
        std::sort(xs.begin(), xs.end());
        if (std::adjacent_find(xs.begin(), xs.end()) == xs.end()) {
            return NodeSet::line(std::move(xs));
        }
    }
}

Coloring regular_coloring_1d(std::size_t n, int k) {
    if (k < 1) throw std::invalid_argument("regular_coloring_1d: k must be positive");
    std::vector<int> colors(n);
    for (std::size_t i = 1; i <= n; ++i) {
        colors[i - 1] = static_cast<int>(i % static_cast<std::size_t>(k)) + 1;
    }
    return Coloring(k, std::move(colors), Coloring::Kind::regular_1d);
}

Coloring regular_coloring_2d(std::size_t side, int k) {
    if (k < 1) throw std::invalid_argument("regular_coloring_2d: k must be positive");
    if (static_cast<std::size_t>(k) > side) {
        throw std::invalid_argument("regular_coloring_2d: k exceeds grid side");
    }
    std::vector<int> colors(side * side);
    for (std::size_t i = 0; i < colors.size(); ++i) {
        const auto x = static_cast<int>(i / side);
        const auto y = static_cast<int>(i % side);
        colors[i] = (x % k) * k + (y % k) + 1;
    }
    return Coloring(k * k, std::move(colors), Coloring::Kind::regular_2d);
}

ColoringEnumeration::ColoringEnumeration(std::size_t n, int k) : n_(n), k_(k) {
    if (n == 0 || n > 10) throw std::invalid_argument("ColoringEnumeration: need 1 <= n <= 10");
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("ColoringEnumeration: need 1 <= k <= n");
    }
    assignment_.assign(n, 1);
    prefix_max_.assign(n, 1);
}

std::optional<Coloring> ColoringEnumeration::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return Coloring(k_, assignment_, Coloring::Kind::explicit_);
    }
    // Advance the restricted-growth string: position i may hold any color up
    // to min(k, 1 + max of the prefix), which canonicalizes assignments by
    // first occurrence of each color.
    for (std::size_t i = n_; i-- > 1;) {
        const int cap = std::min(k_, prefix_max_[i - 1] + 1);
        if (assignment_[i] < cap) {
            ++assignment_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], assignment_[i]);
            for (std::size_t j = i + 1; j < n_; ++j) {
                assignment_[j] = 1;
                prefix_max_[j] = prefix_max_[j - 1];
            }
            return Coloring(k_, assignment_, Coloring::Kind::explicit_);
        }
    }
    done_ = true;
    return std::nullopt;
}

}  // namespace sinrsim::gen
