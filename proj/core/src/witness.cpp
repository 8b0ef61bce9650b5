#include "sinrsim/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sinrsim::analysis {

namespace {

void require_unit_interval_1d(const NodeSet& nodes, const char* who) {
    if (nodes.dimension() != 1) {
        throw std::invalid_argument(std::string(who) + ": needs a 1D node set");
    }
    if (nodes.size() == 0) return;
    if (nodes.xs().front() < 0.0 || nodes.xs().back() > 1.0) {
        throw std::invalid_argument(std::string(who) + ": positions must lie in [0, 1]");
    }
}

std::size_t count_closed(const std::vector<double>& xs, double lo, double hi) {
    return static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), hi) -
                                    std::lower_bound(xs.begin(), xs.end(), lo));
}

std::size_t count_open(const std::vector<double>& xs, double lo, double hi) {
    const auto begin = std::upper_bound(xs.begin(), xs.end(), lo);
    const auto end = std::lower_bound(xs.begin(), xs.end(), hi);
    return begin < end ? static_cast<std::size_t>(end - begin) : 0;
}

}  // namespace

bool gap_conditions_hold(const NodeSet& nodes, double x, double ell, int k, double beta,
                         std::array<std::size_t, 3>* counts) {
    if (!(ell > 0.0 && ell < 1.0 / 3.0)) return false;
    if (!(x >= 0.0 && x <= 1.0 - 3.0 * ell)) return false;
    const auto& xs = nodes.xs();
    const std::array<std::size_t, 3> c{
        count_closed(xs, x, x + ell),
        count_open(xs, x + ell, x + 2.0 * ell),
        count_closed(xs, x + 2.0 * ell, x + 3.0 * ell),
    };
    if (counts) *counts = c;
    const double dense_needed = 4.0 / beta * static_cast<double>(k);
    return static_cast<double>(c[0]) >= dense_needed && c[1] == 0 && c[2] >= 1;
}

std::optional<GapWitness> detect_gap_condition(const NodeSet& nodes, int k, double beta) {
    require_unit_interval_1d(nodes, "detect_gap_condition");
    if (k < 1) throw std::invalid_argument("detect_gap_condition: k must be positive");
    if (!(beta >= 1.0)) throw std::invalid_argument("detect_gap_condition: beta must be >= 1");
    const std::size_t n = nodes.size();
    if (n == 0) return std::nullopt;
    const auto& xs = nodes.xs();

    // Window lengths to try: a geometric grid (scanned from every anchor),
    // the canonical length of the regular-coloring lower bound, and one
    // candidate per inter-node hole (half the hole fits an empty middle
    // interval exactly; scanned only from the hole's own left node and 0).
    struct Candidate {
        double ell;
        std::ptrdiff_t hole = -1;  // index into xs of the hole's left node
    };
    std::vector<Candidate> candidates;
    for (double ell = 1.0 / static_cast<double>(n); ell < 1.0 / 3.0; ell *= 1.1) {
        candidates.push_back({ell});
    }
    const double canonical = 4.0 / beta * static_cast<double>(k) / static_cast<double>(n);
    if (canonical > 0.0 && canonical < 1.0 / 3.0) candidates.push_back({canonical});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double half = (xs[i + 1] - xs[i]) / 2.0;
        if (half > 0.0 && half < 1.0 / 3.0) {
            candidates.push_back({half, static_cast<std::ptrdiff_t>(i)});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.ell > b.ell; });

    std::vector<double> anchors;
    anchors.reserve(n + 1);
    anchors.push_back(0.0);
    anchors.insert(anchors.end(), xs.begin(), xs.end());

    const auto probe = [&](double x, double ell) -> std::optional<GapWitness> {
        GapWitness witness;
        witness.x = x;
        witness.ell = ell;
        if (gap_conditions_hold(nodes, x, ell, k, beta, &witness.counts)) return witness;
        return std::nullopt;
    };

    for (const Candidate& candidate : candidates) {
        if (candidate.hole >= 0) {
            const double left = xs[static_cast<std::size_t>(candidate.hole)];
            if (auto witness = probe(left, candidate.ell)) return witness;
            if (auto witness = probe(0.0, candidate.ell)) return witness;
            continue;
        }
        for (double x : anchors) {
            if (x > 1.0 - 3.0 * candidate.ell) break;  // anchors ascend
            if (auto witness = probe(x, candidate.ell)) return witness;
        }
    }
    return std::nullopt;
}

double gamma_threshold(const SinrParams& params, double epsilon, GammaVariant variant) {
    if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0)) {
        throw std::invalid_argument("gamma_threshold: epsilon must lie in (0, 1/3)");
    }
    const double numerator = variant == GammaVariant::proof ? 1.0 + epsilon : 1.0 - epsilon;
    const double base = 1.0 + numerator / (1.0 - 3.0 * epsilon);
    return params.beta / (params.beta + std::pow(base, params.alpha));
}

namespace {

struct BandScan {
    double eps;
    double n;  // as double, for band arithmetic

    bool in_band(double offset, int i) const {
        const double center = std::ldexp(1.0, i) / n;
        return offset >= (1.0 - eps) * center && offset <= (1.0 + eps) * center;
    }
};

}  // namespace

std::optional<ExpSeqWitness> detect_exponential_sequence(const NodeSet& nodes, double epsilon,
                                                         int h_min) {
    require_unit_interval_1d(nodes, "detect_exponential_sequence");
    if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0)) {
        throw std::invalid_argument("detect_exponential_sequence: epsilon must lie in (0, 1/3)");
    }
    if (h_min < 2) throw std::invalid_argument("detect_exponential_sequence: h_min must be >= 2");
    const std::size_t n = nodes.size();
    if (n < (std::size_t{1} << h_min)) {
        throw std::invalid_argument("detect_exponential_sequence: need n >= 2^h_min");
    }

    const auto& xs = nodes.xs();
    const BandScan scan{epsilon, static_cast<double>(n)};
    int h_cap = 0;
    while ((std::size_t{1} << (h_cap + 1)) <= n) ++h_cap;  // n >= 2^h requirement

    std::optional<ExpSeqWitness> best;
    for (std::size_t s = 0; s < n; ++s) {
        const double band1 = 2.0 / static_cast<double>(n);
        const std::array<double, 3> anchor_candidates{
            xs[s] - band1,
            xs[s] - (1.0 - epsilon) * band1,
            xs[s] - (1.0 + epsilon) * band1,
        };
        for (double a : anchor_candidates) {
            if (a < 0.0) continue;
            if (s > 0 && xs[s - 1] >= a) continue;  // stray node inside [a, q_1)
            if (!scan.in_band(xs[s] - a, 1)) continue;

            // Consecutive nodes must keep landing in successive bands.
            int h = 1;
            while (h < h_cap && s + static_cast<std::size_t>(h) < n &&
                   scan.in_band(xs[s + static_cast<std::size_t>(h)] - a, h + 1)) {
                ++h;
            }
            // The node after the run must keep its distance, otherwise the
            // rightmost run node loses the spacing bound toward the right.
            // Dropping the last run node restores the bound by construction.
            const auto run_end = s + static_cast<std::size_t>(h);  // one past q_h
            if (run_end < n) {
                const double gap = xs[run_end] - xs[run_end - 1];
                if (gap < (1.0 - 3.0 * epsilon) * std::ldexp(1.0, h) / static_cast<double>(n)) {
                    --h;
                }
            }
            if (h < h_min) continue;
            if (best && best->h >= h) continue;

            ExpSeqWitness witness;
            witness.a = a;
            witness.b = xs[s + static_cast<std::size_t>(h) - 1];
            witness.epsilon = epsilon;
            witness.h = h;
            witness.indices.reserve(static_cast<std::size_t>(h));
            for (int i = 0; i < h; ++i) {
                witness.indices.push_back(s + static_cast<std::size_t>(i) + 1);
            }
            best = std::move(witness);
        }
    }
    return best;
}

}  // namespace sinrsim::analysis
