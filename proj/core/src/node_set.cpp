#include "sinrsim/node_set.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace sinrsim {

std::string Violation::message() const {
    switch (kind) {
        case Kind::duplicate_position:
            return "duplicate position at node " + std::to_string(index);
        case Kind::unsorted_1d:
            return "1d positions not ascending at node " + std::to_string(index);
    }
    return "unknown violation";
}

ValidationReport NodeSet::validate(int dimension,
                                   const std::vector<double>& xs,
                                   const std::vector<double>& ys) {
    ValidationReport report;
    const std::size_t n = xs.size();
    if (dimension == 1) {
        for (std::size_t i = 1; i < n; ++i) {
            if (xs[i] == xs[i - 1]) {
                report.violations.push_back({Violation::Kind::duplicate_position, i + 1});
            } else if (xs[i] < xs[i - 1]) {
                report.violations.push_back({Violation::Kind::unsorted_1d, i + 1});
            }
        }
        // unsorted input can hide duplicates from the adjacent scan
        if (!report.ok()) {
            std::vector<double> sorted = xs;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 1; i < sorted.size(); ++i) {
                if (sorted[i] == sorted[i - 1] && xs[i] > xs[i - 1]) {
                    report.violations.push_back({Violation::Kind::duplicate_position, i + 1});
                    break;
                }
            }
        }
    } else {
        std::map<std::pair<double, double>, NodeIndex> seen;
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, inserted] = seen.emplace(std::make_pair(xs[i], ys[i]), i + 1);
            if (!inserted) {
                report.violations.push_back({Violation::Kind::duplicate_position, i + 1});
            }
        }
    }
    return report;
}

NodeSet::NodeSet(int dim, std::vector<double> xs, std::vector<double> ys)
    : dimension_(dim), xs_(std::move(xs)), ys_(std::move(ys)) {}

NodeSet NodeSet::line(std::vector<double> xs) {
    auto report = validate(1, xs);
    if (!report.ok()) {
        throw std::invalid_argument("NodeSet::line: " + report.violations.front().message());
    }
    return NodeSet(1, std::move(xs), {});
}

NodeSet NodeSet::plane(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("NodeSet::plane: coordinate arrays differ in length");
    }
    auto report = validate(2, xs, ys);
    if (!report.ok()) {
        throw std::invalid_argument("NodeSet::plane: " + report.violations.front().message());
    }
    return NodeSet(2, std::move(xs), std::move(ys));
}

NodeIndex NodeSet::check(NodeIndex i) const {
    if (i < 1 || i > xs_.size()) {
        throw std::out_of_range("node index " + std::to_string(i) + " out of range [1, " +
                                std::to_string(xs_.size()) + "]");
    }
    return i;
}

double NodeSet::distance_squared(NodeIndex u, NodeIndex v) const {
    const double dx = x(u) - x(v);
    if (dimension_ == 1) return dx * dx;
    const double dy = y(u) - y(v);
    return dx * dx + dy * dy;
}

double NodeSet::distance(NodeIndex u, NodeIndex v) const {
    return std::sqrt(distance_squared(u, v));
}

}  // namespace sinrsim
