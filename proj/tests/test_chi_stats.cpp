#include "doctest.h"

#include <cmath>

#include "seaidx/chi_stats.hpp"
#include "seaidx/error.hpp"
#include "chi_reference.hpp"

using namespace seaidx;

namespace {
constexpr ChiScale kScales[3] = {ChiScale::kNone, ChiScale::kTo256, ChiScale::kInvSqrtLen};
}

TEST_CASE("scale factors") {
    CHECK(scale_factor(ChiScale::kNone, 16) == 1.0);
    CHECK(scale_factor(ChiScale::kTo256, 16) == doctest::Approx(4.0));
    CHECK(scale_factor(ChiScale::kInvSqrtLen, 16) == doctest::Approx(0.25));
    CHECK(to_string(ChiScale::kTo256) == "sqrt(256/m)");
}

TEST_CASE("analytic moments reproduce the published table") {
    for (const auto& row : kChiReference) {
        for (int s = 0; s < 3; ++s) {
            const auto stats = chi_stats_analytic(row.m, kScales[s]);
            INFO("m=" << row.m << " scale=" << s << " mean=" << stats.mean << " var=" << stats.variance);
            CHECK(matches_printed(stats.mean, row.cells[2 * s]));
            CHECK(matches_printed(stats.variance, row.cells[2 * s + 1]));
        }
    }
    // Spot values from the chi distribution with scale sqrt(2).
    const auto s256 = chi_stats_analytic(256, ChiScale::kNone);
    CHECK(s256.mean == doctest::Approx(22.605330753278874).epsilon(1e-12));
    CHECK(s256.variance == doctest::Approx(0.9990215348643687).epsilon(1e-9));
}

TEST_CASE("scaling by 1/sqrt(m) divides the mean by sqrt(m) and the variance by m") {
    for (std::size_t m : {8u, 16u, 96u, 128u, 256u, 1000u}) {
        const auto base = chi_stats_analytic(m, ChiScale::kNone);
        const auto scaled = chi_stats_analytic(m, ChiScale::kInvSqrtLen);
        CHECK(scaled.mean == doctest::Approx(base.mean / std::sqrt(double(m))).epsilon(1e-14));
        CHECK(scaled.variance == doctest::Approx(base.variance / double(m)).epsilon(1e-12));
    }
}

TEST_CASE("Monte Carlo agrees with the analytic moments") {
    for (std::size_t m : {256u, 128u}) {
        const auto exact = chi_stats_analytic(m, ChiScale::kNone);
        const auto mc = chi_stats_montecarlo(m, ChiScale::kNone, 100000, 7);
        CHECK(mc.samples == 100000);
        CHECK(std::abs(mc.mean - exact.mean) / exact.mean < 0.005);
        CHECK(std::abs(mc.mean - exact.mean) <= 3.0 * mc.mean_stderr);
        CHECK(std::abs(mc.variance - exact.variance) <= 3.0 * mc.variance_stderr);
    }
    const auto a = chi_stats_montecarlo(16, ChiScale::kTo256, 2000, 3);
    const auto b = chi_stats_montecarlo(16, ChiScale::kTo256, 2000, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.variance == b.variance);
    CHECK_THROWS_AS(chi_stats_montecarlo(16, ChiScale::kNone, 10, 3), seaidx::Error);
}
