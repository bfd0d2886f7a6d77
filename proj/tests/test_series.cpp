#include "doctest.h"

#include <vector>

#include "seaidx/rng.hpp"
#include "seaidx/series.hpp"

using namespace seaidx;

TEST_CASE("znormalize keeps an already normalized series") {
    const DataSeries z = znormalize(DataSeries{1.0, -1.0});
    CHECK(z[0] == doctest::Approx(1.0));
    CHECK(z[1] == doctest::Approx(-1.0));
}

TEST_CASE("znormalize rejects constant series") {
    try {
        znormalize(DataSeries{5, 5, 5, 5});
        FAIL("expected ConstantSeries");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kConstantSeries);
    }
}

TEST_CASE("znormalize of a ramp matches hand-computed values") {
    // mean 1.5, population stddev sqrt(1.25)
    const DataSeries z = znormalize(DataSeries{0, 1, 2, 3});
    const double expected[] = {-1.3416407864998738, -0.4472135954999579, 0.4472135954999579, 1.3416407864998738};
    for (int i = 0; i < 4; ++i) CHECK(z[i] == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("znormalize output moments and idempotence") {
    CounterRng rng(11, 0);
    for (int trial = 0; trial < 50; ++trial) {
        DataSeries x(64);
        for (auto& v : x) v = 3.0 + 7.0 * rng.gaussian();
        const DataSeries z = znormalize(x);
        const auto mo = moments(std::span<const double>(z));
        CHECK(std::fabs(mo.mean) <= 1e-6);
        CHECK(std::fabs(mo.stddev - 1.0) <= 1e-6);
        const DataSeries zz = znormalize(z);
        for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::fabs(zz[i] - z[i]) <= 1e-6);
    }
}

TEST_CASE("euclidean basics") {
    const DataSeries x{0.5, -2.0, 3.0};
    CHECK(euclidean(x, x) == 0.0);
    CHECK(euclidean(DataSeries{0, 0, 0}, DataSeries{1, 1, 1}) == doctest::Approx(std::sqrt(3.0)));
    try {
        euclidean(DataSeries{1, 2}, DataSeries{1, 2, 3});
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kLengthMismatch);
    }
}

TEST_CASE("euclidean matches a scalar-loop oracle on pinned random series") {
    const DataSeries a{0.0012301533574825742, 0.2987455375084699,  -0.2741378553622176,  -0.8905918387572742,
                       -0.45467078517172255,  -0.9916465549964624, 0.060143602597438485, 1.3402152455545335,
                       -0.49220651855132963,  -0.6204748998199404, 0.4898420501851982,   0.35688700816006075,
                       0.10541424899789856,   -0.9304680447082047, -0.02925182246327349, 0.6953031944582878};
    const DataSeries b{-1.344214547285082,   -0.45761576104021817, -1.901222739800844,   -1.289537739784976,
                       -1.8417350377917323,  -0.23509113107468127, -1.2674464814437032,  0.2712643588217015,
                       0.15675108662422516,  -0.18693094462995438, -2.516759710820513,   -0.5386928958466366,
                       -0.048500945401071985, 0.11330898600330756, -1.5301357655053935,  -0.47775327603393064};
    CHECK(euclidean(a, b) == doctest::Approx(5.077700267630153).epsilon(1e-14));
    CHECK(euclidean(a, b) == euclidean(b, a));
}

TEST_CASE("euclidean triangle inequality on random triples") {
    CounterRng rng(3, 1);
    for (int trial = 0; trial < 2000; ++trial) {
        DataSeries a(32), b(32), c(32);
        for (std::size_t i = 0; i < 32; ++i) {
            a[i] = rng.gaussian();
            b[i] = rng.gaussian();
            c[i] = rng.gaussian();
        }
        const double ab = euclidean(a, b), bc = euclidean(b, c), ac = euclidean(a, c);
        CHECK(ac <= (ab + bc) * (1.0 + 1e-9));
    }
}

TEST_CASE("Dataset shape checks and subsets") {
    CHECK_THROWS_AS(Dataset(2, 3, std::vector<float>(5)), Error);
    CHECK_THROWS_AS(Dataset::from_series({{1, 2}, {1, 2, 3}}), Error);
    const Dataset d = Dataset::from_series({{1, 2}, {3, 4}, {5, 6}});
    const std::vector<std::size_t> ids{2, 0};
    const Dataset s = d.subset(ids);
    CHECK(s.size() == 2);
    CHECK(s.row(0)[0] == 5.0f);
    CHECK(s.row(1)[1] == 2.0f);
}

TEST_CASE("znormalize on a dataset reports the offending row") {
    const Dataset d = Dataset::from_series({{1, 2, 3}, {4, 4, 4}});
    try {
        znormalize(d);
        FAIL("expected ConstantSeries");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kConstantSeries);
        CHECK(std::string(e.what()).find("series 1") != std::string::npos);
    }
}
