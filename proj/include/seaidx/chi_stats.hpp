#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace seaidx {

/// Scaling applied to both series before measuring their distance.
enum class ChiScale {
    kNone,        // x 1
    kTo256,       // x sqrt(256 / m): the SoS-preserving scale relative to length 256
    kInvSqrtLen,  // x sqrt(1 / m): the scale used inside the training losses
};

std::string_view to_string(ChiScale scale);
double scale_factor(ChiScale scale, std::size_t m);

/// Mean and variance of the Euclidean distance between two series whose
/// points are i.i.d. N(0, 1), after both are multiplied by the scale factor.
/// The unscaled distance follows chi_m with scale sqrt(2).
struct ChiStats {
    std::size_t m = 0;
    ChiScale scale = ChiScale::kNone;
    double mean = 0.0;
    double variance = 0.0;
    // Monte Carlo only: standard errors of the two estimates (0 for analytic).
    double mean_stderr = 0.0;
    double variance_stderr = 0.0;
    std::size_t samples = 0;
};

/// mean = 2 * G * s, variance = 4 * (m/2 - G^2) * s^2 where
/// G = Gamma((m+1)/2) / Gamma(m/2) (via lgamma) and s is the scale factor.
ChiStats chi_stats_analytic(std::size_t m, ChiScale scale);

/// Empirical moments over n_pairs pairs of i.i.d. standard Gaussian series.
ChiStats chi_stats_montecarlo(std::size_t m, ChiScale scale, std::size_t n_pairs, std::uint64_t seed);

}  // namespace seaidx
