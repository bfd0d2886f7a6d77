#include "seaidx/chi_stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "seaidx/error.hpp"
#include "seaidx/rng.hpp"

namespace seaidx {

std::string_view to_string(ChiScale scale) {
    switch (scale) {
        case ChiScale::kNone: return "1";
        case ChiScale::kTo256: return "sqrt(256/m)";
        case ChiScale::kInvSqrtLen: return "sqrt(1/m)";
    }
    return "?";
}

double scale_factor(ChiScale scale, std::size_t m) {
    switch (scale) {
        case ChiScale::kNone: return 1.0;
        case ChiScale::kTo256: return std::sqrt(256.0 / static_cast<double>(m));
        case ChiScale::kInvSqrtLen: return std::sqrt(1.0 / static_cast<double>(m));
    }
    return 1.0;
}

ChiStats chi_stats_analytic(std::size_t m, ChiScale scale) {
    if (m < 1) throw Error(ErrorCode::kInvalidArgument, "degrees of freedom must be positive");
    const double dm = static_cast<double>(m);
    // Gamma(128.5) alone overflows a double, the ratio does not.
    const double ratio = std::exp(std::lgamma((dm + 1.0) / 2.0) - std::lgamma(dm / 2.0));
    const double s = scale_factor(scale, m);
    ChiStats out;
    out.m = m;
    out.scale = scale;
    out.mean = std::sqrt(2.0) * ratio * std::sqrt(2.0) * s;
    out.variance = 2.0 * (dm / 2.0 - ratio * ratio) * 2.0 * s * s;
    return out;
}

ChiStats chi_stats_montecarlo(std::size_t m, ChiScale scale, std::size_t n_pairs, std::uint64_t seed) {
    if (m < 1) throw Error(ErrorCode::kInvalidArgument, "degrees of freedom must be positive");
    if (n_pairs < 1000) throw Error(ErrorCode::kInvalidArgument, "need at least 1,000 pairs");
    CounterRng rng(seed, stream_id(StreamDomain::kMisc, m));
    const double s = scale_factor(scale, m);
    // Welford accumulation of the distance plus running sums for the fourth central moment.
    double mean = 0.0;
    double m2 = 0.0;
    std::vector<double> samples(n_pairs);
    for (std::size_t p = 0; p < n_pairs; ++p) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const auto [x, y] = rng.gaussian_pair();
            const double diff = (x - y) * s;
            acc += diff * diff;
        }
        const double d = std::sqrt(acc);
        samples[p] = d;
        const double delta = d - mean;
        mean += delta / static_cast<double>(p + 1);
        m2 += delta * (d - mean);
    }
    const double n = static_cast<double>(n_pairs);
    const double variance = m2 / (n - 1.0);
    double m4 = 0.0;
    for (double d : samples) {
        const double c = d - mean;
        m4 += c * c * c * c;
    }
    m4 /= n;

    ChiStats out;
    out.m = m;
    out.scale = scale;
    out.mean = mean;
    out.variance = variance;
    out.samples = n_pairs;
    out.mean_stderr = std::sqrt(variance / n);
    out.variance_stderr = std::sqrt(std::max(0.0, (m4 - variance * variance) / n));
    return out;
}

}  // namespace seaidx
