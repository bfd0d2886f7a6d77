#include "doctest.h"

#include <cmath>
#include <set>

#include "seaidx/datagen.hpp"
#include "seaidx/metrics.hpp"

using namespace seaidx;

namespace {

Summaries identity_summaries(const Dataset& d) {
    Summaries s{SummaryKind::kPaa, d.size(), d.length(), d.length(), {}};
    s.values.assign(d.values().begin(), d.values().end());
    return s;
}

std::vector<std::size_t> all_ids(std::size_t n) {
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    return ids;
}

}  // namespace

TEST_CASE("metric report line") {
    MetricReport r{"avg-diff", 0.25, 10, {{"l", "16"}, {"kind", "paa"}}};
    CHECK(r.str().rfind("metric=avg-diff value=", 0) == 0);
    CHECK(r.str().find(" n=10 l=16 kind=paa") != std::string::npos);
}

TEST_CASE("pair sampling") {
    const auto ids = all_ids(100);
    const auto pairs = pair_samples(ids, 5);
    CHECK(pairs.size() == 100);
    for (const auto& [a, b] : pairs) {
        CHECK(a != b);
        CHECK(b < 100);
    }
    CHECK(pairs == pair_samples(ids, 5));
    CHECK(pairs != pair_samples(ids, 6));
}

TEST_CASE("average distance difference") {
    const Dataset d = gen_randwalk(500, 128, 21);
    const auto pairs = pair_samples(all_ids(d.size()), 1);
    CHECK(avg_distance_diff(d, identity_summaries(d), pairs) < 1e-9);

    // Hand-computed: two series of length 4, PAA with l=2.
    Dataset tiny = Dataset::from_series({{1, 1, -1, -1}, {1, -1, 1, -1}}, false);
    const auto paa_s = summarize_paa(tiny, 2);
    const std::vector<SeriesPair> one{{0, 1}};
    // d = sqrt(0+4+4+0) = 2*sqrt(2); PAA rows (1,-1) and (0,0) -> sqrt(2)*sqrt(2) = 2.
    CHECK(avg_distance_diff(tiny, paa_s, one) == doctest::Approx(2.0 * std::sqrt(2.0) - 2.0));

    // Both lower-bound-ish summaries lose distance; the DFT keeps more on random walks.
    const double paa_diff = avg_distance_diff(d, summarize_paa(d, 16), pairs);
    const double dft_diff = avg_distance_diff(d, summarize_dft_dea(d, 16), pairs);
    CHECK(paa_diff > 0.0);
    CHECK(dft_diff > 0.0);
}

TEST_CASE("reconstruction RMS") {
    const Dataset d = gen_randwalk(50, 64, 2);
    CHECK(reconstruction_rms(d, d) == 0.0);
    Dataset zeros(d.size(), d.length(), std::vector<float>(d.size() * d.length(), 0.0f), false);
    CHECK(reconstruction_rms(d, zeros) == doctest::Approx(1.0).epsilon(0.02));

    Dataset a = Dataset::from_series({{1, 2, 3, 4}}, false);
    Dataset b = Dataset::from_series({{1, 2, 3, 6}}, false);
    CHECK(reconstruction_rms(a, b) == doctest::Approx(1.0));  // sqrt(4/4)
    CHECK_THROWS_AS(reconstruction_rms(a, d), Error);
}

TEST_CASE("k nearest with id tie-break") {
    const std::vector<double> dist{3, 1, 1, 0, 2};
    const auto nn = k_nearest(dist.size(), 3, [&](std::size_t i) { return dist[i]; });
    CHECK(nn == std::vector<std::size_t>{3, 1, 2});
}

TEST_CASE("nearest-neighbour coverage") {
    GenSpec spec{GenKind::kRandWalk, 400, 64, 10, kDefaultAmplification, 4};
    const Dataset base = generate(spec);
    const Dataset queries = gen_queries(spec, 10);
    const std::vector<std::size_t> ks{1, 10, 400};
    const auto ident = nn_coverage(base, identity_summaries(base), queries, identity_summaries(queries), ks);
    for (double c : ident) CHECK(c == doctest::Approx(1.0));

    const auto paa_cov =
        nn_coverage(base, summarize_paa(base, 8), queries, summarize_paa(queries, 8), ks);
    CHECK(paa_cov.back() == doctest::Approx(1.0));  // k equal to the base size
    for (double c : paa_cov) {
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
    const std::vector<std::size_t> bad{401};
    CHECK_THROWS_AS(nn_coverage(base, summarize_paa(base, 8), queries, summarize_paa(queries, 8), bad), Error);
    const std::vector<std::size_t> zero{0};
    CHECK_THROWS_AS(nn_coverage(base, summarize_paa(base, 8), queries, summarize_paa(queries, 8), zero), Error);
}

TEST_CASE("leaf coverage") {
    const Dataset d = gen_fseries(3000, 64, 10, 10.0, 12);
    const auto tree = IsaxTree::build(sax_words(summarize_paa(d, 16), 8), 30);
    CHECK(leaf_coverage(tree, all_ids(d.size())) == tree.leaves().size());
    const std::vector<std::size_t> one{17};
    CHECK(leaf_coverage(tree, one) == 1);

    const std::vector<std::size_t> sizes{10, 100};
    const std::vector<std::uint64_t> seeds{1, 2, 3};
    const auto rows = leaf_coverage_experiment(tree, sizes, seeds);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].strategy == SampleStrategy::kSeasam);
    CHECK(rows[1].strategy == SampleStrategy::kUniform);
    CHECK(rows[1].runs == 3);
    for (const auto& r : rows) CHECK(r.coverage <= double(r.n_prime));
}
