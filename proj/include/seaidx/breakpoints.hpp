#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace seaidx {

inline constexpr unsigned kMaxSaxBits = 8;

/// Standard normal quantile function (Wichura's AS241, ~1e-16 relative accuracy).
double normal_quantile(double p);

/// Standard normal CDF.
double normal_cdf(double x);

/// Equal-probability Gaussian breakpoints for every cardinality 2^b, b in 1..8.
/// Table b holds the 2^b - 1 ascending thresholds Phi^-1(k / 2^b).
class Breakpoints {
public:
    static const Breakpoints& standard();

    std::span<const double> table(unsigned bits) const;

    /// Symbol of `value` at `bits` bits: the number of thresholds <= value, so a
    /// value sitting exactly on a breakpoint takes the higher symbol.
    std::uint8_t symbol(double value, unsigned bits) const;

    /// Closed-open region [lower, upper) covered by `symbol` at `bits` bits.
    /// bits == 0 is the whole real line. Infinite edges are +-infinity.
    struct Region {
        double lower;
        double upper;
    };
    Region region(unsigned symbol, unsigned bits) const;

private:
    Breakpoints();
    std::array<std::vector<double>, kMaxSaxBits + 1> tables_;
};

}  // namespace seaidx
