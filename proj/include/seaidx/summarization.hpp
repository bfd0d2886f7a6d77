#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "seaidx/breakpoints.hpp"
#include "seaidx/series.hpp"

namespace seaidx {

inline constexpr std::size_t kDefaultSegments = 16;
inline constexpr unsigned kDefaultSaxBits = 8;

struct PaaVector {
    std::vector<double> values;
    std::size_t source_length = 0;
};

/// Learned (or DFT-derived) embedding. When `scaled`, per-series mean is 0 and
/// the population stddev is sqrt(m / l), so the sum of squares equals m.
struct DeaVector {
    std::vector<double> values;
    std::size_t source_length = 0;
    bool scaled = false;
};

/// SAX word at a uniform cardinality 2^bits. The binary form of each symbol is
/// its iSAX bit string, most significant bit first.
struct SaxWord {
    std::vector<std::uint8_t> symbols;
    unsigned bits = kDefaultSaxBits;

    bool operator==(const SaxWord&) const = default;
};

/// Segment boundaries for `l` segments over `m` points; m % l long segments come first.
/// Returns l + 1 offsets starting at 0 and ending at m.
std::vector<std::size_t> segment_bounds(std::size_t m, std::size_t l);

PaaVector paa(std::span<const double> series, std::size_t l);
PaaVector paa(std::span<const float> series, std::size_t l);

/// sqrt(m / l) * euclidean(a, b).
double paa_distance(const PaaVector& a, const PaaVector& b);

SaxWord sax_from_paa(std::span<const double> values, unsigned bits);
inline SaxWord sax_from_paa(const PaaVector& paa_vector, unsigned bits) {
    return sax_from_paa(paa_vector.values, bits);
}

/// Keeps the per_symbol_bits[j] most significant bits of symbol j. The result's
/// `bits` field keeps the original cardinality; symbols are right-shifted values.
SaxWord reduce_cardinality(const SaxWord& word, std::span<const std::uint8_t> per_symbol_bits);

/// Region lower bound between a query (in PAA units) and the iSAX region given
/// by `prefix` symbols at `per_symbol_bits`:
///   sqrt(m / l) * sqrt(sum_j dist(query_j, region_j)^2)
double mindist_prefix(std::span<const double> query, std::size_t source_length,
                      std::span<const std::uint8_t> prefix, std::span<const std::uint8_t> per_symbol_bits);

/// MINDIST of a query PAA to a full-cardinality SAX word viewed at per_symbol_bits.
double mindist(const PaaVector& query, const SaxWord& word, std::span<const std::uint8_t> per_symbol_bits);
double mindist(const PaaVector& query, const SaxWord& word);

/// Z-normalizes a raw embedding and multiplies it by sqrt(m / l) so its sum of
/// squares equals m. Throws DegenerateEmbedding for a constant embedding.
DeaVector dea_scale(std::span<const double> embedding, std::size_t source_length);

/// Orthonormal DFT basis restricted to frequencies 1..l/2.
class DftBasis {
public:
    DftBasis(std::size_t m, std::size_t l);

    std::size_t length() const noexcept { return m_; }
    std::size_t budget() const noexcept { return l_; }

    /// Coefficients X_k = m^-1/2 * sum_t x_t exp(-2 pi i k t / m), k = 1..l/2,
    /// flattened as (re, im) pairs.
    template <typename T>
    void transform(std::span<const T> series, std::span<double> out) const;

    /// Real series whose spectrum is the given low-frequency coefficients plus
    /// their conjugates; DC and frequencies above l/2 are zero.
    DataSeries inverse(std::span<const double> coefficients) const;

private:
    std::size_t m_;
    std::size_t l_;
    std::vector<double> cos_;  // (l/2) x m
    std::vector<double> sin_;
};

/// First l/2 non-DC DFT coefficients as (re, im) pairs. l must be even and <= m.
std::vector<double> dft_summarize(std::span<const double> series, std::size_t l);
std::vector<double> dft_summarize(std::span<const float> series, std::size_t l);

/// Inverse of dft_summarize for a series of length m (zero-filling the missing spectrum).
DataSeries dft_reconstruct(std::span<const double> coefficients, std::size_t m);

enum class SummaryKind { kPaa, kDea };

std::string_view to_string(SummaryKind kind);
SummaryKind parse_summary_kind(std::string_view text);

/// Row-major summaries of a whole dataset. PAA rows are segment means; DEA rows
/// are dea_scale outputs. The summarization-space distance is
///   PAA: sqrt(m / l) * euclidean(row_a, row_b)
///   DEA: euclidean(row_a, row_b)
/// which coincide once DEA rows are expressed in PAA units (divided by sqrt(m / l)).
struct Summaries {
    SummaryKind kind = SummaryKind::kPaa;
    std::size_t n = 0;
    std::size_t l = 0;
    std::size_t source_m = 0;
    std::vector<double> values;

    std::span<const double> row(std::size_t i) const { return {values.data() + i * l, l}; }

    /// Row expressed in the units the Gaussian breakpoints quantize.
    std::vector<double> index_units(std::size_t i) const;
    std::vector<double> index_units(std::span<const double> row) const;

    double distance(std::span<const double> a, std::span<const double> b) const;
    double distance(std::size_t i, std::size_t j) const { return distance(row(i), row(j)); }
};

Summaries summarize_paa(const Dataset& dataset, std::size_t l, unsigned threads = 1);
Summaries summarize_dft_dea(const Dataset& dataset, std::size_t l, unsigned threads = 1);

/// Wraps n x l raw embeddings (e.g. produced by an external encoder) as scaled DEAs.
Summaries summaries_from_embeddings(std::span<const float> embeddings, std::size_t n, std::size_t l,
                                    std::size_t source_m);

/// n SAX words of l symbols each, row-major.
struct SaxWordArray {
    std::size_t n = 0;
    std::size_t l = 0;
    unsigned bits = kDefaultSaxBits;
    std::vector<std::uint8_t> symbols;

    std::span<const std::uint8_t> word(std::size_t i) const { return {symbols.data() + i * l, l}; }
    SaxWord at(std::size_t i) const { return {{word(i).begin(), word(i).end()}, bits}; }
};

SaxWordArray sax_words(const Summaries& summaries, unsigned bits, unsigned threads = 1);

}  // namespace seaidx
