#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "seaidx/isax_tree.hpp"
#include "seaidx/series.hpp"

namespace seaidx {

struct BsfPoint {
    std::size_t series_examined = 0;
    double bsf_distance = 0.0;
};

struct QueryReport {
    std::size_t query_id = 0;
    std::size_t budget = 0;
    std::vector<BsfPoint> trajectory;
    std::vector<std::int32_t> visited_leaves;
    std::size_t approximate_id = 0;
    double approximate_distance = std::numeric_limits<double>::infinity();
    double exact_distance = std::numeric_limits<double>::quiet_NaN();

    std::size_t series_examined() const { return trajectory.empty() ? 0 : trajectory.back().series_examined; }
    /// exact / approximate, with 0/0 defined as 1. Requires exact_distance.
    double tightness() const;
};

/// exact / approximate in (0, 1]; 0/0 is 1.
double tightness(double exact_distance, double approximate_distance);

struct NearestNeighbor {
    std::size_t id = 0;
    double distance = std::numeric_limits<double>::infinity();
    std::size_t series_examined = 0;
};

/// Budget-limited approximate search: visits leaves in ascending MINDIST
/// order, scans their series in insertion order, and stops once `budget`
/// series have been examined (possibly part-way through a leaf). The BSF is
/// recorded after each visited leaf. `query_units` is the query summary in
/// index units (PAA, or DEA divided by sqrt(m/l)).
QueryReport approx_query(const IsaxTree& tree, const Dataset& dataset, std::span<const float> query,
                         std::span<const double> query_units, std::size_t budget);

/// Full scan; ties go to the lowest id.
NearestNeighbor exact_query_bruteforce(const Dataset& dataset, std::span<const float> query);

/// Priority traversal with MINDIST pruning against the running BSF. Only
/// defined for PAA-based trees, where MINDIST lower-bounds the true distance.
NearestNeighbor exact_query_pruned(const IsaxTree& tree, const Dataset& dataset, std::span<const float> query);

/// Mean pairwise Euclidean distance inside each listed leaf, averaged over the
/// leaves with at least two members. Returns 0 when no leaf qualifies.
double leaf_compactness(const IsaxTree& tree, const Dataset& dataset, std::span<const std::int32_t> leaves);

}  // namespace seaidx
