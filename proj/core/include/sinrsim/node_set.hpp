#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sinrsim {

/// Node indices are 1-based throughout the library, matching the usual
/// p_1..p_n convention for ordered point sets. Index 0 is never a valid node.
using NodeIndex = std::size_t;

struct Violation {
    enum class Kind { duplicate_position, unsorted_1d };
    Kind kind;
    NodeIndex index;  // 1-based index of the offending position
    std::string message() const;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// An immutable set of n pairwise-distinct points in R or R^2.
/// 1D positions are stored in ascending order; construction rejects
/// duplicates and unsorted 1D input (the SINR ratio is undefined at
/// distance zero).
class NodeSet {
public:
    /// 1D node set; xs must be strictly ascending.
    static NodeSet line(std::vector<double> xs);
    /// 2D node set; points given as (x, y) pairs, pairwise distinct.
    static NodeSet plane(std::vector<double> xs, std::vector<double> ys);

    static ValidationReport validate(int dimension,
                                     const std::vector<double>& xs,
                                     const std::vector<double>& ys = {});

    int dimension() const { return dimension_; }
    std::size_t size() const { return xs_.size(); }

    double x(NodeIndex i) const { return xs_[check(i) - 1]; }
    double y(NodeIndex i) const { return dimension_ == 2 ? ys_[check(i) - 1] : 0.0; }

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

    double distance(NodeIndex u, NodeIndex v) const;
    /// Squared Euclidean distance; exact in floating point for integer
    /// grid coordinates, which keeps alpha = 2 interference sums on grids
    /// free of sqrt round-off.
    double distance_squared(NodeIndex u, NodeIndex v) const;

private:
    NodeSet(int dim, std::vector<double> xs, std::vector<double> ys);
    NodeIndex check(NodeIndex i) const;

    int dimension_;
    std::vector<double> xs_;
    std::vector<double> ys_;  // empty in 1D
};

}  // namespace sinrsim
