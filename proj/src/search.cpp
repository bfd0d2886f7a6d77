#include "seaidx/search.hpp"

#include <cmath>
#include <queue>
#include <utility>

namespace seaidx {

double tightness(double exact_distance, double approximate_distance) {
    if (approximate_distance == 0.0) return 1.0;
    return exact_distance / approximate_distance;
}

double QueryReport::tightness() const { return seaidx::tightness(exact_distance, approximate_distance); }

namespace {

using Entry = std::pair<double, std::int32_t>;
using MinQueue = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

void seed_queue(const IsaxTree& tree, std::span<const double> units, std::size_t m, MinQueue& queue) {
    for (auto index : tree.top_level()) {
        queue.emplace(tree.mindist(units, m, static_cast<std::size_t>(index)), index);
    }
}

void check_query(const IsaxTree& tree, const Dataset& dataset, std::span<const float> query) {
    if (tree.size() == 0 || tree.leaves().empty()) throw Error(ErrorCode::kEmptyTree, "tree holds no series");
    if (dataset.size() != tree.size()) throw Error(ErrorCode::kShapeMismatch, "dataset does not match tree");
    if (query.size() != dataset.length()) throw Error(ErrorCode::kLengthMismatch, "query length differs");
}

}  // namespace

QueryReport approx_query(const IsaxTree& tree, const Dataset& dataset, std::span<const float> query,
                         std::span<const double> query_units, std::size_t budget) {
    if (budget < 1) throw Error(ErrorCode::kBadBudget, "budget must be at least 1");
    check_query(tree, dataset, query);
    if (query_units.size() != tree.segments()) throw Error(ErrorCode::kShapeMismatch, "query summary width");

    QueryReport report;
    report.budget = budget;
    MinQueue queue;
    seed_queue(tree, query_units, dataset.length(), queue);
    std::size_t examined = 0;
    double bsf_sq = std::numeric_limits<double>::infinity();
    while (!queue.empty() && examined < budget) {
        const auto [dist, index] = queue.top();
        queue.pop();
        const auto& node = tree.node(static_cast<std::size_t>(index));
        if (!node.is_leaf()) {
            for (auto child : node.children) {
                queue.emplace(tree.mindist(query_units, dataset.length(), static_cast<std::size_t>(child)), child);
            }
            continue;
        }
        report.visited_leaves.push_back(index);
        for (auto id : node.ids) {
            if (examined == budget) break;
            ++examined;
            const double d = squared_euclidean(query, dataset.row(id));
            if (d < bsf_sq) {
                bsf_sq = d;
                report.approximate_id = id;
            }
        }
        report.trajectory.push_back({examined, std::sqrt(bsf_sq)});
    }
    report.approximate_distance = std::sqrt(bsf_sq);
    return report;
}

NearestNeighbor exact_query_bruteforce(const Dataset& dataset, std::span<const float> query) {
    if (query.size() != dataset.length()) throw Error(ErrorCode::kLengthMismatch, "query length differs");
    NearestNeighbor best;
    double best_sq = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const double d = squared_euclidean(query, dataset.row(i));
        if (d < best_sq) {
            best_sq = d;
            best.id = i;
        }
    }
    best.distance = std::sqrt(best_sq);
    best.series_examined = dataset.size();
    return best;
}

NearestNeighbor exact_query_pruned(const IsaxTree& tree, const Dataset& dataset, std::span<const float> query) {
    if (tree.kind() != SummaryKind::kPaa) {
        throw Error(ErrorCode::kUnsupportedSummarization, "exact search needs a PAA-based tree");
    }
    check_query(tree, dataset, query);
    const auto units = paa(query, tree.segments()).values;

    NearestNeighbor best;
    double best_sq = std::numeric_limits<double>::infinity();
    MinQueue queue;
    seed_queue(tree, units, dataset.length(), queue);
    while (!queue.empty()) {
        const auto [dist, index] = queue.top();
        queue.pop();
        // Ties at exactly the BSF are still explored so the lowest id wins.
        if (dist * dist > best_sq) break;
        const auto& node = tree.node(static_cast<std::size_t>(index));
        if (!node.is_leaf()) {
            for (auto child : node.children) {
                const double child_dist = tree.mindist(units, dataset.length(), static_cast<std::size_t>(child));
                if (child_dist * child_dist <= best_sq) queue.emplace(child_dist, child);
            }
            continue;
        }
        for (auto id : node.ids) {
            ++best.series_examined;
            const double d = squared_euclidean(query, dataset.row(id));
            if (d < best_sq || (d == best_sq && id < best.id)) {
                best_sq = d;
                best.id = id;
            }
        }
    }
    best.distance = std::sqrt(best_sq);
    return best;
}

double leaf_compactness(const IsaxTree& tree, const Dataset& dataset, std::span<const std::int32_t> leaves) {
    double total = 0.0;
    std::size_t counted = 0;
    for (auto index : leaves) {
        const auto& ids = tree.node(static_cast<std::size_t>(index)).ids;
        if (ids.size() < 2) continue;
        double sum = 0.0;
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) sum += euclidean(dataset.row(ids[a]), dataset.row(ids[b]));
        }
        total += sum / static_cast<double>(ids.size() * (ids.size() - 1) / 2);
        ++counted;
    }
    return counted == 0 ? 0.0 : total / static_cast<double>(counted);
}

}  // namespace seaidx
