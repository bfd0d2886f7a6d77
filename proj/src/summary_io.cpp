#include "seaidx/summary_io.hpp"

#include "seaidx/io.hpp"

namespace seaidx {

void save_summaries(const Summaries& summaries, const std::filesystem::path& name) {
    std::vector<float> raw(summaries.values.begin(), summaries.values.end());
    write_f32(payload_path(name), raw);
    Sidecar sc;
    sc.set("n", static_cast<std::int64_t>(summaries.n));
    sc.set("m", static_cast<std::int64_t>(summaries.l));
    sc.set("source_m", static_cast<std::int64_t>(summaries.source_m));
    sc.set("scaled", summaries.kind == SummaryKind::kDea ? 1 : 0);
    sc.set("kind", std::string(to_string(summaries.kind)));
    sc.write(meta_path(name));
}

Summaries load_summaries(const std::filesystem::path& name) {
    const Sidecar sc = Sidecar::read(meta_path(name));
    const auto n = sc.get_int("n");
    const auto l = sc.get_int("m");
    const auto source_m = sc.get_int("source_m");
    if (n < 1 || l < 1 || source_m < l) throw Error(ErrorCode::kMalformedMeta, "bad n / m / source_m");
    const SummaryKind kind = sc.contains("kind") ? parse_summary_kind(sc.get("kind")) : SummaryKind::kDea;
    const auto raw = read_f32(payload_path(name), static_cast<std::size_t>(n * l));
    if (kind == SummaryKind::kDea) {
        // Rescaling an already-scaled DEA is the identity up to float rounding.
        return summaries_from_embeddings(raw, static_cast<std::size_t>(n), static_cast<std::size_t>(l),
                                         static_cast<std::size_t>(source_m));
    }
    return Summaries{kind, static_cast<std::size_t>(n), static_cast<std::size_t>(l),
                     static_cast<std::size_t>(source_m), std::vector<double>(raw.begin(), raw.end())};
}

void save_sax(const SaxWordArray& words, const std::filesystem::path& name) {
    write_u8(std::filesystem::path(name.string() + ".sax"), words.symbols);
    Sidecar sc;
    sc.set("n", static_cast<std::int64_t>(words.n));
    sc.set("l", static_cast<std::int64_t>(words.l));
    sc.set("bits", static_cast<std::int64_t>(words.bits));
    sc.write(std::filesystem::path(name.string() + ".sax.meta"));
}

SaxWordArray load_sax(const std::filesystem::path& name) {
    const Sidecar sc = Sidecar::read(std::filesystem::path(name.string() + ".sax.meta"));
    const auto n = sc.get_int("n");
    const auto l = sc.get_int("l");
    const auto bits = sc.get_int("bits");
    if (n < 1 || l < 1 || bits < 1 || bits > 8) throw Error(ErrorCode::kMalformedMeta, "bad n / l / bits");
    SaxWordArray words{static_cast<std::size_t>(n), static_cast<std::size_t>(l), static_cast<unsigned>(bits),
                       read_u8(std::filesystem::path(name.string() + ".sax"), static_cast<std::size_t>(n * l))};
    const unsigned limit = 1u << bits;
    for (auto s : words.symbols) {
        if (s >= limit) throw Error(ErrorCode::kMalformedMeta, "symbol exceeds cardinality");
    }
    return words;
}

}  // namespace seaidx
