#include "seaidx/summarization.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "seaidx/parallel.hpp"

namespace seaidx {

std::vector<std::size_t> segment_bounds(std::size_t m, std::size_t l) {
    if (l < 1 || l > m) {
        throw Error(ErrorCode::kBadSegmentCount,
                    "segment count " + std::to_string(l) + " outside [1, " + std::to_string(m) + "]");
    }
    const std::size_t base = m / l;
    const std::size_t longer = m % l;
    std::vector<std::size_t> bounds(l + 1, 0);
    for (std::size_t j = 0; j < l; ++j) bounds[j + 1] = bounds[j] + base + (j < longer ? 1 : 0);
    return bounds;
}

namespace {

template <typename T>
PaaVector paa_impl(std::span<const T> series, std::size_t l) {
    const auto bounds = segment_bounds(series.size(), l);
    PaaVector out{std::vector<double>(l), series.size()};
    for (std::size_t j = 0; j < l; ++j) {
        double sum = 0.0;
        for (std::size_t t = bounds[j]; t < bounds[j + 1]; ++t) sum += static_cast<double>(series[t]);
        out.values[j] = sum / static_cast<double>(bounds[j + 1] - bounds[j]);
    }
    return out;
}

double sqrt_ratio(std::size_t m, std::size_t l) {
    return std::sqrt(static_cast<double>(m) / static_cast<double>(l));
}

}  // namespace

PaaVector paa(std::span<const double> series, std::size_t l) { return paa_impl(series, l); }
PaaVector paa(std::span<const float> series, std::size_t l) { return paa_impl(series, l); }

double paa_distance(const PaaVector& a, const PaaVector& b) {
    if (a.values.size() != b.values.size() || a.source_length != b.source_length) {
        throw Error(ErrorCode::kShapeMismatch, "PAA vectors differ in l or source length");
    }
    return sqrt_ratio(a.source_length, a.values.size()) *
           euclidean(std::span<const double>(a.values), std::span<const double>(b.values));
}

SaxWord sax_from_paa(std::span<const double> values, unsigned bits) {
    if (bits < 1 || bits > kMaxSaxBits) throw Error(ErrorCode::kBadBits, "bits must be in 1..8");
    const auto& bp = Breakpoints::standard();
    SaxWord word{std::vector<std::uint8_t>(values.size()), bits};
    for (std::size_t j = 0; j < values.size(); ++j) word.symbols[j] = bp.symbol(values[j], bits);
    return word;
}

SaxWord reduce_cardinality(const SaxWord& word, std::span<const std::uint8_t> per_symbol_bits) {
    if (per_symbol_bits.size() != word.symbols.size()) {
        throw Error(ErrorCode::kShapeMismatch, "one bit count per symbol required");
    }
    SaxWord out = word;
    for (std::size_t j = 0; j < word.symbols.size(); ++j) {
        if (per_symbol_bits[j] > word.bits) {
            throw Error(ErrorCode::kBadBits, "cannot raise cardinality of symbol " + std::to_string(j));
        }
        out.symbols[j] = static_cast<std::uint8_t>(word.symbols[j] >> (word.bits - per_symbol_bits[j]));
    }
    return out;
}

double mindist_prefix(std::span<const double> query, std::size_t source_length,
                      std::span<const std::uint8_t> prefix, std::span<const std::uint8_t> per_symbol_bits) {
    if (query.size() != prefix.size() || prefix.size() != per_symbol_bits.size()) {
        throw Error(ErrorCode::kShapeMismatch, "query and word lengths differ");
    }
    const auto& bp = Breakpoints::standard();
    double acc = 0.0;
    for (std::size_t j = 0; j < query.size(); ++j) {
        const auto region = bp.region(prefix[j], per_symbol_bits[j]);
        double gap = 0.0;
        if (query[j] < region.lower) {
            gap = region.lower - query[j];
        } else if (query[j] > region.upper) {
            gap = query[j] - region.upper;
        }
        acc += gap * gap;
    }
    return sqrt_ratio(source_length, query.size()) * std::sqrt(acc);
}

double mindist(const PaaVector& query, const SaxWord& word, std::span<const std::uint8_t> per_symbol_bits) {
    const SaxWord reduced = reduce_cardinality(word, per_symbol_bits);
    return mindist_prefix(query.values, query.source_length, reduced.symbols, per_symbol_bits);
}

double mindist(const PaaVector& query, const SaxWord& word) {
    const std::vector<std::uint8_t> full(word.symbols.size(), static_cast<std::uint8_t>(word.bits));
    return mindist(query, word, full);
}

DeaVector dea_scale(std::span<const double> embedding, std::size_t source_length) {
    if (embedding.empty()) throw Error(ErrorCode::kDegenerateEmbedding, "empty embedding");
    const Moments mo = moments(embedding);
    if (mo.stddev <= kConstantSeriesThreshold) {
        throw Error(ErrorCode::kDegenerateEmbedding, "embedding has stddev " + std::to_string(mo.stddev));
    }
    const double factor = sqrt_ratio(source_length, embedding.size()) / mo.stddev;
    DeaVector out{std::vector<double>(embedding.size()), source_length, true};
    for (std::size_t j = 0; j < embedding.size(); ++j) out.values[j] = (embedding[j] - mo.mean) * factor;
    return out;
}

DftBasis::DftBasis(std::size_t m, std::size_t l) : m_(m), l_(l) {
    if (l == 0 || l % 2 != 0 || l > m) {
        throw Error(ErrorCode::kBadBudget,
                    "DFT budget " + std::to_string(l) + " must be even and <= " + std::to_string(m));
    }
    const std::size_t freqs = l / 2;
    cos_.resize(freqs * m);
    sin_.resize(freqs * m);
    for (std::size_t k = 0; k < freqs; ++k) {
        for (std::size_t t = 0; t < m; ++t) {
            // Reduce k*t mod m first so the angle stays accurate for long series.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(((k + 1) * t) % m) /
                                 static_cast<double>(m);
            cos_[k * m + t] = std::cos(angle);
            sin_[k * m + t] = std::sin(angle);
        }
    }
}

template <typename T>
void DftBasis::transform(std::span<const T> series, std::span<double> out) const {
    if (series.size() != m_ || out.size() != l_) throw Error(ErrorCode::kShapeMismatch, "DFT shape mismatch");
    const double norm = 1.0 / std::sqrt(static_cast<double>(m_));
    for (std::size_t k = 0; k < l_ / 2; ++k) {
        const double* c = cos_.data() + k * m_;
        const double* s = sin_.data() + k * m_;
        double re = 0.0;
        double im = 0.0;
        for (std::size_t t = 0; t < m_; ++t) {
            const double x = static_cast<double>(series[t]);
            re += x * c[t];
            im -= x * s[t];
        }
        out[2 * k] = re * norm;
        out[2 * k + 1] = im * norm;
    }
}

template void DftBasis::transform<float>(std::span<const float>, std::span<double>) const;
template void DftBasis::transform<double>(std::span<const double>, std::span<double>) const;

DataSeries DftBasis::inverse(std::span<const double> coefficients) const {
    if (coefficients.size() != l_) throw Error(ErrorCode::kShapeMismatch, "coefficient count mismatch");
    const double norm = 1.0 / std::sqrt(static_cast<double>(m_));
    DataSeries x(m_, 0.0);
    for (std::size_t k = 0; k < l_ / 2; ++k) {
        const std::size_t freq = k + 1;
        // The Nyquist bin has no separate conjugate partner.
        const double weight = (2 * freq == m_) ? 1.0 : 2.0;
        const double re = coefficients[2 * k];
        const double im = coefficients[2 * k + 1];
        for (std::size_t t = 0; t < m_; ++t) {
            x[t] += weight * norm * (re * cos_[k * m_ + t] - im * sin_[k * m_ + t]);
        }
    }
    return x;
}

std::vector<double> dft_summarize(std::span<const double> series, std::size_t l) {
    DftBasis basis(series.size(), l);
    std::vector<double> out(l);
    basis.transform(series, std::span<double>(out));
    return out;
}

std::vector<double> dft_summarize(std::span<const float> series, std::size_t l) {
    DftBasis basis(series.size(), l);
    std::vector<double> out(l);
    basis.transform(series, std::span<double>(out));
    return out;
}

DataSeries dft_reconstruct(std::span<const double> coefficients, std::size_t m) {
    return DftBasis(m, coefficients.size()).inverse(coefficients);
}

std::string_view to_string(SummaryKind kind) {
    return kind == SummaryKind::kPaa ? "paa" : "dea";
}

SummaryKind parse_summary_kind(std::string_view text) {
    if (text == "paa") return SummaryKind::kPaa;
    if (text == "dea") return SummaryKind::kDea;
    throw Error(ErrorCode::kMalformedMeta, "unknown summary kind '" + std::string(text) + "'");
}

std::vector<double> Summaries::index_units(std::span<const double> r) const {
    std::vector<double> out(r.begin(), r.end());
    if (kind == SummaryKind::kDea) {
        const double inv = 1.0 / sqrt_ratio(source_m, l);
        for (double& v : out) v *= inv;
    }
    return out;
}

std::vector<double> Summaries::index_units(std::size_t i) const { return index_units(row(i)); }

double Summaries::distance(std::span<const double> a, std::span<const double> b) const {
    const double d = euclidean(a, b);
    return kind == SummaryKind::kPaa ? sqrt_ratio(source_m, l) * d : d;
}

Summaries summarize_paa(const Dataset& dataset, std::size_t l, unsigned threads) {
    segment_bounds(dataset.length(), l);
    Summaries s{SummaryKind::kPaa, dataset.size(), l, dataset.length(),
                std::vector<double>(dataset.size() * l)};
    parallel_for(dataset.size(), threads, [&](std::size_t i) {
        const auto p = paa(dataset.row(i), l);
        std::copy(p.values.begin(), p.values.end(), s.values.begin() + static_cast<std::ptrdiff_t>(i * l));
    });
    return s;
}

Summaries summarize_dft_dea(const Dataset& dataset, std::size_t l, unsigned threads) {
    const DftBasis basis(dataset.length(), l);
    Summaries s{SummaryKind::kDea, dataset.size(), l, dataset.length(),
                std::vector<double>(dataset.size() * l)};
    parallel_for(dataset.size(), threads, [&](std::size_t i) {
        std::vector<double> raw(l);
        basis.transform(dataset.row(i), std::span<double>(raw));
        DeaVector dea;
        try {
            dea = dea_scale(raw, dataset.length());
        } catch (const Error& e) {
            throw Error(e.code(), "series " + std::to_string(i) + " (" + e.what() + ")");
        }
        std::copy(dea.values.begin(), dea.values.end(), s.values.begin() + static_cast<std::ptrdiff_t>(i * l));
    });
    return s;
}

Summaries summaries_from_embeddings(std::span<const float> embeddings, std::size_t n, std::size_t l,
                                    std::size_t source_m) {
    if (embeddings.size() != n * l) throw Error(ErrorCode::kSizeMismatch, "embedding payload is not n*l");
    if (l < 1 || l > source_m) throw Error(ErrorCode::kBadSegmentCount, "embedding width exceeds series length");
    Summaries s{SummaryKind::kDea, n, l, source_m, std::vector<double>(n * l)};
    std::vector<double> raw(l);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < l; ++j) raw[j] = embeddings[i * l + j];
        const DeaVector dea = dea_scale(raw, source_m);
        std::copy(dea.values.begin(), dea.values.end(), s.values.begin() + static_cast<std::ptrdiff_t>(i * l));
    }
    return s;
}

SaxWordArray sax_words(const Summaries& summaries, unsigned bits, unsigned threads) {
    if (bits < 1 || bits > kMaxSaxBits) throw Error(ErrorCode::kBadBits, "bits must be in 1..8");
    SaxWordArray out{summaries.n, summaries.l, bits, std::vector<std::uint8_t>(summaries.n * summaries.l)};
    const auto& bp = Breakpoints::standard();
    parallel_for(summaries.n, threads, [&](std::size_t i) {
        const auto units = summaries.index_units(i);
        for (std::size_t j = 0; j < summaries.l; ++j) out.symbols[i * summaries.l + j] = bp.symbol(units[j], bits);
    });
    return out;
}

}  // namespace seaidx
