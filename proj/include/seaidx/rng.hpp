#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace seaidx {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: word k of stream (seed, stream) is
///
///   key  = mix(seed ^ mix(stream + 0x9E3779B97F4A7C15))
///   u64k = mix(key + (k + 1) * 0x9E3779B97F4A7C15)
///
/// where mix is the SplitMix64 finalizer. Uniforms take the top 53 bits;
/// Gaussians use the Box-Muller cosine branch on two consecutive words
/// (one word pair per normal draw, no caching), so any stream position can be
/// reproduced from (seed, stream, counter) alone in any language.
class CounterRng {
public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(splitmix64_mix(seed ^ splitmix64_mix(stream + kGolden))) {}

    std::uint64_t next_u64() noexcept { return splitmix64_mix(key_ + (++counter_) * kGolden); }

    /// Uniform in [0, 1).
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1].
    double uniform_open0() noexcept { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) via Lemire's multiply-shift (slight bias < bound / 2^64).
    std::uint64_t below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    double gaussian() noexcept {
        const double u1 = uniform_open0();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Both Box-Muller outputs from one pair of uniforms; `first` equals what gaussian() would return.
    std::pair<double, double> gaussian_pair() noexcept {
        const double u1 = uniform_open0();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(angle), r * std::sin(angle)};
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Stream domains keep base series, query series, and sampling draws disjoint.
enum class StreamDomain : std::uint64_t {
    kBase = 0,
    kQuery = 1ULL << 62,
    kSampling = 2ULL << 62,
    kMisc = 3ULL << 62,
};

constexpr std::uint64_t stream_id(StreamDomain domain, std::uint64_t index) noexcept {
    return static_cast<std::uint64_t>(domain) | (index & ((1ULL << 62) - 1));
}

}  // namespace seaidx
