#include "seaidx/sampling.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>

#include "seaidx/invsax.hpp"
#include "seaidx/io.hpp"
#include "seaidx/rng.hpp"

namespace seaidx {

std::string_view to_string(SampleStrategy strategy) {
    return strategy == SampleStrategy::kSeasam ? "seasam" : "uniform";
}

SampleStrategy parse_sample_strategy(std::string_view text) {
    if (text == "seasam") return SampleStrategy::kSeasam;
    if (text == "uniform") return SampleStrategy::kUniform;
    throw Error(ErrorCode::kInvalidArgument, "unknown sampling strategy '" + std::string(text) + "'");
}

namespace {

void check_sample_size(std::size_t n, std::size_t n_prime) {
    if (n_prime < 1 || n_prime > n) {
        throw Error(ErrorCode::kBadSampleSize,
                    "sample size " + std::to_string(n_prime) + " outside [1, " + std::to_string(n) + "]");
    }
}

}  // namespace

std::vector<std::size_t> invsax_order(const SaxWordArray& words) {
    const std::size_t width = invsax_key_bytes(words.l, words.bits);
    const auto keys = invsax_keys(words);
    std::vector<std::size_t> order(words.n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::memcmp(keys.data() + a * width, keys.data() + b * width, width) < 0;
    });
    return order;
}

SampleSet seasam(const SaxWordArray& words, std::size_t n_prime) {
    check_sample_size(words.n, n_prime);
    const auto order = invsax_order(words);
    const std::size_t stride = words.n / n_prime;
    SampleSet out{{}, SampleStrategy::kSeasam, 0};
    out.indices.reserve(n_prime);
    for (std::size_t pos = 0; pos < words.n && out.indices.size() < n_prime; pos += stride) {
        out.indices.push_back(order[pos]);
    }
    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

SampleSet seasam(const Dataset& dataset, std::size_t n_prime, std::size_t l, unsigned bits) {
    check_sample_size(dataset.size(), n_prime);
    return seasam(sax_words(summarize_paa(dataset, l), bits), n_prime);
}

SampleSet uniform_sample(std::size_t n, std::size_t n_prime, std::uint64_t seed) {
    check_sample_size(n, n_prime);
    CounterRng rng(seed, stream_id(StreamDomain::kSampling, 0));
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < n_prime; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(n_prime);
    std::sort(pool.begin(), pool.end());
    return {std::move(pool), SampleStrategy::kUniform, seed};
}

void save_sample(const SampleSet& sample, const std::filesystem::path& name) {
    std::vector<std::uint64_t> raw(sample.indices.begin(), sample.indices.end());
    write_u64(std::filesystem::path(name.string() + ".idx"), raw);
    Sidecar sc;
    sc.set("n_prime", static_cast<std::int64_t>(sample.indices.size()));
    sc.set("strategy", std::string(to_string(sample.strategy)));
    sc.set("seed", static_cast<std::int64_t>(sample.seed));
    sc.write(std::filesystem::path(name.string() + ".idx.meta"));
}

SampleSet load_sample(const std::filesystem::path& name) {
    const Sidecar sc = Sidecar::read(std::filesystem::path(name.string() + ".idx.meta"));
    const auto n_prime = sc.get_int("n_prime");
    if (n_prime < 0) throw Error(ErrorCode::kMalformedMeta, "negative n_prime");
    const auto raw = read_u64(std::filesystem::path(name.string() + ".idx"), static_cast<std::size_t>(n_prime));
    SampleSet out{{raw.begin(), raw.end()}, parse_sample_strategy(sc.get("strategy")),
                  static_cast<std::uint64_t>(sc.contains("seed") ? sc.get_int("seed") : 0)};
    if (!std::is_sorted(out.indices.begin(), out.indices.end()) ||
        std::adjacent_find(out.indices.begin(), out.indices.end()) != out.indices.end()) {
        throw Error(ErrorCode::kMalformedMeta, "sample indices must be strictly increasing");
    }
    return out;
}

}  // namespace seaidx
