#include "doctest.h"

#include <cmath>

#include "seaidx/breakpoints.hpp"

using namespace seaidx;

TEST_CASE("normal quantile against reference values") {
    // Reference values from an independent implementation (scipy.stats.norm.ppf).
    struct Ref {
        double p, x;
    };
    const Ref refs[] = {{0.5, 0.0},
                        {0.75, 0.6744897501960817},
                        {0.25, -0.6744897501960817},
                        {0.975, 1.959963984540054},
                        {0.9, 1.2815515655446004},
                        {0.3, -0.5244005127080409},
                        {0.02425, -1.972961051311885},
                        {1.0 / 256.0, -2.6600674686174592},
                        {255.0 / 256.0, 2.6600674686174592},
                        {1e-10, -6.361340902404056},
                        {1e-300, -37.0470962993612}};
    for (const auto& r : refs) CHECK(std::fabs(normal_quantile(r.p) - r.x) <= 1e-9 * std::max(1.0, std::fabs(r.x)));
}

TEST_CASE("quantile inverts the CDF") {
    for (int k = 1; k < 1000; ++k) {
        const double p = k / 1000.0;
        CHECK(std::fabs(normal_cdf(normal_quantile(p)) - p) <= 1e-12);
    }
}

TEST_CASE("breakpoint tables are increasing, symmetric and nested") {
    const auto& bp = Breakpoints::standard();
    for (unsigned b = 1; b <= kMaxSaxBits; ++b) {
        const auto t = bp.table(b);
        REQUIRE(t.size() == (1u << b) - 1);
        for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
        for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::fabs(t[i] + t[t.size() - 1 - i]) <= 1e-12);
        if (b > 1) {
            // Every coarser threshold is also a threshold at b bits.
            const auto coarse = bp.table(b - 1);
            for (std::size_t i = 0; i < coarse.size(); ++i) CHECK(coarse[i] == t[2 * i + 1]);
        }
    }
    CHECK(bp.table(2)[0] == doctest::Approx(-0.6744897501960817).epsilon(1e-12));
    CHECK(bp.table(2)[1] == 0.0);
}

TEST_CASE("boundary values take the higher symbol") {
    const auto& bp = Breakpoints::standard();
    CHECK(bp.symbol(0.0, 1) == 1);
    CHECK(bp.symbol(0.0, 2) == 2);
    CHECK(bp.symbol(bp.table(3)[4], 3) == 5);
    const auto r = bp.region(0, 0);
    CHECK(std::isinf(r.lower));
    CHECK(std::isinf(r.upper));
}
