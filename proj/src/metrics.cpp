#include "seaidx/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "seaidx/parallel.hpp"
#include "seaidx/rng.hpp"

namespace seaidx {

std::string MetricReport::str() const {
    std::ostringstream out;
    out.precision(8);
    out << "metric=" << name << " value=" << value << " n=" << n_samples;
    for (const auto& [k, v] : config) out << ' ' << k << '=' << v;
    return out.str();
}

std::vector<SeriesPair> pair_samples(std::span<const std::size_t> sample, std::uint64_t seed) {
    if (sample.size() < 2) throw Error(ErrorCode::kBadSampleSize, "pairing needs at least two samples");
    CounterRng rng(seed, stream_id(StreamDomain::kSampling, 1));
    std::vector<SeriesPair> pairs;
    pairs.reserve(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        // Uniform over the other n-1 positions.
        std::size_t j = static_cast<std::size_t>(rng.below(sample.size() - 1));
        if (j >= i) ++j;
        pairs.emplace_back(sample[i], sample[j]);
    }
    return pairs;
}

double avg_distance_diff(const Dataset& dataset, const Summaries& summaries, std::span<const SeriesPair> pairs) {
    if (pairs.empty()) throw Error(ErrorCode::kInvalidArgument, "at least one pair required");
    if (summaries.n != dataset.size()) throw Error(ErrorCode::kShapeMismatch, "summaries do not match dataset");
    double total = 0.0;
    for (const auto& [a, b] : pairs) {
        const double d = euclidean(dataset.row(a), dataset.row(b));
        total += std::fabs(summaries.distance(a, b) - d);
    }
    return total / static_cast<double>(pairs.size());
}

double reconstruction_rms(const Dataset& original, const Dataset& reconstructed) {
    if (original.size() != reconstructed.size() || original.length() != reconstructed.length()) {
        throw Error(ErrorCode::kShapeMismatch, "reconstruction shape differs from original");
    }
    if (original.empty()) throw Error(ErrorCode::kInvalidArgument, "empty dataset");
    double total = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        total += std::sqrt(squared_euclidean(original.row(i), reconstructed.row(i)) /
                           static_cast<double>(original.length()));
    }
    return total / static_cast<double>(original.size());
}

namespace {

void check_ks(std::size_t base_size, std::span<const std::size_t> ks) {
    for (auto k : ks) {
        if (k < 1 || k > base_size) {
            throw Error(ErrorCode::kBadK, "k=" + std::to_string(k) + " outside [1, " + std::to_string(base_size) + "]");
        }
    }
}

}  // namespace

std::vector<double> nn_coverage_one(const Dataset& base, const Summaries& base_summaries,
                                    std::span<const float> query, std::span<const double> query_summary,
                                    std::span<const std::size_t> ks) {
    check_ks(base.size(), ks);
    const std::size_t kmax = *std::max_element(ks.begin(), ks.end());
    const auto true_nn = k_nearest(base.size(), kmax, [&](std::size_t i) { return squared_euclidean(query, base.row(i)); });
    const auto summary_nn =
        k_nearest(base.size(), kmax, [&](std::size_t i) { return base_summaries.distance(query_summary, base_summaries.row(i)); });
    std::vector<double> out;
    out.reserve(ks.size());
    for (auto k : ks) {
        std::vector<std::size_t> a(true_nn.begin(), true_nn.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<std::size_t> b(summary_nn.begin(), summary_nn.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<std::size_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        out.push_back(static_cast<double>(common.size()) / static_cast<double>(k));
    }
    return out;
}

std::vector<double> nn_coverage(const Dataset& base, const Summaries& base_summaries, const Dataset& queries,
                                const Summaries& query_summaries, std::span<const std::size_t> ks, unsigned threads) {
    check_ks(base.size(), ks);
    if (queries.empty()) throw Error(ErrorCode::kInvalidArgument, "no queries");
    std::vector<std::vector<double>> per_query(queries.size());
    parallel_for(queries.size(), threads, [&](std::size_t q) {
        per_query[q] = nn_coverage_one(base, base_summaries, queries.row(q), query_summaries.row(q), ks);
    });
    std::vector<double> mean(ks.size(), 0.0);
    for (const auto& row : per_query) {
        for (std::size_t i = 0; i < ks.size(); ++i) mean[i] += row[i];
    }
    for (double& v : mean) v /= static_cast<double>(queries.size());
    return mean;
}

std::vector<double> ideal_tightness_curve(const Dataset& base, const Summaries& base_summaries,
                                          const Dataset& queries, const Summaries& query_summaries,
                                          std::span<const std::size_t> budgets, unsigned threads) {
    for (auto b : budgets) {
        if (b < 1 || b > base.size()) throw Error(ErrorCode::kBadBudget, "budget outside [1, n]");
    }
    if (queries.empty()) throw Error(ErrorCode::kInvalidArgument, "no queries");
    std::vector<std::vector<double>> per_query(queries.size());
    parallel_for(queries.size(), threads, [&](std::size_t q) {
        const auto query = queries.row(q);
        std::vector<double> true_sq(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) true_sq[i] = squared_euclidean(query, base.row(i));
        const double exact = std::sqrt(*std::min_element(true_sq.begin(), true_sq.end()));

        std::vector<std::pair<double, std::size_t>> ranked(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            ranked[i] = {base_summaries.distance(query_summaries.row(q), base_summaries.row(i)), i};
        }
        std::sort(ranked.begin(), ranked.end());
        std::vector<double> curve;
        curve.reserve(budgets.size());
        for (auto b : budgets) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < b; ++r) best = std::min(best, true_sq[ranked[r].second]);
            curve.push_back(tightness(exact, std::sqrt(best)));
        }
        per_query[q] = std::move(curve);
    });
    std::vector<double> mean(budgets.size(), 0.0);
    for (const auto& row : per_query) {
        for (std::size_t i = 0; i < budgets.size(); ++i) mean[i] += row[i];
    }
    for (double& v : mean) v /= static_cast<double>(queries.size());
    return mean;
}

TightnessResult tightness_by_budget(const IsaxTree& tree, const Dataset& base, const Dataset& queries,
                                    const Summaries& query_summaries, std::span<const std::size_t> budgets,
                                    unsigned threads) {
    if (queries.empty()) throw Error(ErrorCode::kInvalidArgument, "no queries");
    if (query_summaries.n != queries.size()) throw Error(ErrorCode::kShapeMismatch, "one query summary per query");
    TightnessResult result;
    result.reports.assign(budgets.size(), std::vector<QueryReport>(queries.size()));
    parallel_for(queries.size(), threads, [&](std::size_t q) {
        const auto query = queries.row(q);
        const auto exact = exact_query_bruteforce(base, query);
        const auto units = query_summaries.index_units(q);
        for (std::size_t b = 0; b < budgets.size(); ++b) {
            auto report = approx_query(tree, base, query, units, budgets[b]);
            report.query_id = q;
            report.exact_distance = exact.distance;
            result.reports[b][q] = std::move(report);
        }
    });
    for (const auto& per_budget : result.reports) {
        double total = 0.0;
        for (const auto& r : per_budget) total += r.tightness();
        result.mean_tightness.push_back(total / static_cast<double>(per_budget.size()));
    }
    return result;
}

std::size_t leaf_coverage(const IsaxTree& tree, std::span<const std::size_t> sample) {
    std::vector<std::int32_t> hit;
    hit.reserve(sample.size());
    for (auto id : sample) hit.push_back(tree.leaf_of(id));
    std::sort(hit.begin(), hit.end());
    return static_cast<std::size_t>(std::unique(hit.begin(), hit.end()) - hit.begin());
}

std::vector<CoverageRow> leaf_coverage_experiment(const IsaxTree& tree, std::span<const std::size_t> sample_sizes,
                                                  std::span<const std::uint64_t> uniform_seeds) {
    std::vector<CoverageRow> rows;
    for (auto n_prime : sample_sizes) {
        const auto sample = seasam(tree.words(), n_prime);
        rows.push_back({SampleStrategy::kSeasam, n_prime, static_cast<double>(leaf_coverage(tree, sample.indices)), 1});
        if (uniform_seeds.empty()) continue;
        double total = 0.0;
        for (auto seed : uniform_seeds) {
            total += static_cast<double>(leaf_coverage(tree, uniform_sample(tree.size(), n_prime, seed).indices));
        }
        rows.push_back({SampleStrategy::kUniform, n_prime, total / static_cast<double>(uniform_seeds.size()),
                        uniform_seeds.size()});
    }
    return rows;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string());
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    emit(header);
    for (const auto& r : rows) emit(r);
}

}  // namespace seaidx
