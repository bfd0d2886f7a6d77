#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "seaidx/rng.hpp"
#include "seaidx/series.hpp"

namespace seaidx {

enum class GenKind { kRandWalk, kFSeries };

inline constexpr double kDefaultAmplification = 10.0;

struct GenSpec {
    GenKind kind = GenKind::kRandWalk;
    std::size_t n = 0;
    std::size_t m = 256;
    std::size_t amplified = 10;  // leading non-DC frequencies amplified (F-series only)
    double amp = kDefaultAmplification;
    std::uint64_t seed = 0;
};

/// "randwalk", "f5" or "f10".
GenSpec parse_gen_kind(std::string_view kind);

/// Raw (not z-normalized) random walk for series `index` of the given stream domain.
DataSeries randwalk_raw(std::uint64_t seed, StreamDomain domain, std::size_t index, std::size_t m);

/// Raw F-series: IDFT of a Gaussian Hermitian spectrum whose frequencies
/// 1..amplified are multiplied by `amp` (DC set to 0).
DataSeries fseries_raw(std::uint64_t seed, StreamDomain domain, std::size_t index, std::size_t m,
                       std::size_t amplified, double amp);

/// Each series is the running sum of m i.i.d. N(0, 1) steps, z-normalized.
Dataset gen_randwalk(std::size_t n, std::size_t m, std::uint64_t seed);

/// Each series is an inverse DFT of a random spectrum with its first K
/// components amplified, z-normalized.
Dataset gen_fseries(std::size_t n, std::size_t m, std::size_t amplified, double amp, std::uint64_t seed);

/// Base dataset for a spec (series i uses stream i of the base domain).
Dataset generate(const GenSpec& spec);

/// n_q series from the same distribution drawn from the disjoint query stream domain.
Dataset gen_queries(const GenSpec& spec, std::size_t n_q);

}  // namespace seaidx
