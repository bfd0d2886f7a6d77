#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "seaidx/series.hpp"
#include "seaidx/summarization.hpp"

namespace seaidx {

enum class SampleStrategy { kSeasam, kUniform };

std::string_view to_string(SampleStrategy strategy);
SampleStrategy parse_sample_strategy(std::string_view text);

struct SampleSet {
    std::vector<std::size_t> indices;  // strictly increasing
    SampleStrategy strategy = SampleStrategy::kSeasam;
    std::uint64_t seed = 0;
};

/// Permutation of [0, n) ordering the words by InvSAX key, ties by index.
std::vector<std::size_t> invsax_order(const SaxWordArray& words);

/// Equal-interval sample over the InvSAX-sorted order: sorted positions
/// 0, s, 2s, ... with s = floor(n / n_prime), truncated to n_prime entries.
SampleSet seasam(const SaxWordArray& words, std::size_t n_prime);

/// SEAsam over PAA-based SAX words of the dataset.
SampleSet seasam(const Dataset& dataset, std::size_t n_prime, std::size_t l = kDefaultSegments,
                 unsigned bits = kDefaultSaxBits);

/// n_prime distinct indices drawn without replacement (partial Fisher-Yates on the
/// sampling stream of `seed`).
SampleSet uniform_sample(std::size_t n, std::size_t n_prime, std::uint64_t seed);
inline SampleSet uniform_sample(const Dataset& dataset, std::size_t n_prime, std::uint64_t seed) {
    return uniform_sample(dataset.size(), n_prime, seed);
}

/// `<name>.idx` (u64 little-endian) plus `<name>.idx.meta`.
void save_sample(const SampleSet& sample, const std::filesystem::path& name);
SampleSet load_sample(const std::filesystem::path& name);

}  // namespace seaidx
