#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "seaidx/isax_tree.hpp"
#include "seaidx/sampling.hpp"
#include "seaidx/search.hpp"
#include "seaidx/series.hpp"
#include "seaidx/summarization.hpp"

namespace seaidx {

struct MetricReport {
    std::string name;
    double value = 0.0;
    std::size_t n_samples = 0;
    std::vector<std::pair<std::string, std::string>> config;

    /// `metric=<name> value=<float> n=<int> key=value ...`
    std::string str() const;
};

using SeriesPair = std::pair<std::size_t, std::size_t>;

/// Pairs every sampled id with a different sampled id drawn uniformly (seeded).
std::vector<SeriesPair> pair_samples(std::span<const std::size_t> sample, std::uint64_t seed);

/// Mean |d'(E_i, E_j) - d(S_i, S_j)| over the pairs.
double avg_distance_diff(const Dataset& dataset, const Summaries& summaries, std::span<const SeriesPair> pairs);

/// Mean over series of sqrt(mean squared pointwise error).
double reconstruction_rms(const Dataset& original, const Dataset& reconstructed);

/// k nearest ids of `target` by `dist(i)`, ties by ascending id.
template <typename Dist>
std::vector<std::size_t> k_nearest(std::size_t n, std::size_t k, Dist&& dist);

/// |kNN_d(S) ∩ kNN_d'(E)| / k for one query, for each k in `ks`.
std::vector<double> nn_coverage_one(const Dataset& base, const Summaries& base_summaries,
                                    std::span<const float> query, std::span<const double> query_summary,
                                    std::span<const std::size_t> ks);

/// nn_coverage_one averaged over every query.
std::vector<double> nn_coverage(const Dataset& base, const Summaries& base_summaries, const Dataset& queries,
                                const Summaries& query_summaries, std::span<const std::size_t> ks,
                                unsigned threads = 1);

/// Index-free tightness upper bound: for each budget k, the tightness of the
/// best true distance among the k series closest in summarization space,
/// averaged over queries.
std::vector<double> ideal_tightness_curve(const Dataset& base, const Summaries& base_summaries,
                                          const Dataset& queries, const Summaries& query_summaries,
                                          std::span<const std::size_t> budgets, unsigned threads = 1);

struct TightnessResult {
    std::vector<double> mean_tightness;             // per budget
    std::vector<std::vector<QueryReport>> reports;  // [budget][query]
};

/// Runs approx_query for every query and budget, filling exact distances by brute force.
TightnessResult tightness_by_budget(const IsaxTree& tree, const Dataset& base, const Dataset& queries,
                                    const Summaries& query_summaries, std::span<const std::size_t> budgets,
                                    unsigned threads = 1);

/// Number of distinct leaves holding at least one sampled series.
std::size_t leaf_coverage(const IsaxTree& tree, std::span<const std::size_t> sample);

struct CoverageRow {
    SampleStrategy strategy = SampleStrategy::kSeasam;
    std::size_t n_prime = 0;
    double coverage = 0.0;  // averaged over seeds for the uniform strategy
    std::size_t runs = 0;
};

/// SEAsam (over the tree's own SAX words) and seeded uniform samples of every
/// size, reporting the distinct leaves hit.
std::vector<CoverageRow> leaf_coverage_experiment(const IsaxTree& tree, std::span<const std::size_t> sample_sizes,
                                                  std::span<const std::uint64_t> uniform_seeds);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

template <typename Dist>
std::vector<std::size_t> k_nearest(std::size_t n, std::size_t k, Dist&& dist) {
    std::vector<std::pair<double, std::size_t>> scored(n);
    for (std::size_t i = 0; i < n; ++i) scored[i] = {dist(i), i};
    k = std::min(k, n);
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end());
    std::vector<std::size_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = scored[i].second;
    return out;
}

}  // namespace seaidx
