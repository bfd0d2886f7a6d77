#include "seaidx/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace seaidx {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T byteswap_if_needed(T v) {
    if constexpr (std::endian::native == std::endian::little) {
        return v;
    } else {
        unsigned char bytes[sizeof(T)];
        std::memcpy(bytes, &v, sizeof(T));
        std::reverse(bytes, bytes + sizeof(T));
        std::memcpy(&v, bytes, sizeof(T));
        return v;
    }
}

template <typename T>
std::vector<T> read_raw(const fs::path& path, std::size_t expected_count) {
    std::error_code ec;
    const auto bytes = fs::file_size(path, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot stat " + path.string());
    if (bytes != expected_count * sizeof(T)) {
        throw Error(ErrorCode::kSizeMismatch,
                    path.string() + " holds " + std::to_string(bytes) + " bytes, expected " +
                        std::to_string(expected_count * sizeof(T)));
    }
    std::vector<T> out(expected_count);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
    in.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(bytes));
    if (!in) throw Error(ErrorCode::kIo, "short read on " + path.string());
    for (auto& v : out) v = byteswap_if_needed(v);
    return out;
}

template <typename T>
void write_raw(const fs::path& path, std::span<const T> values) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
    if constexpr (std::endian::native == std::endian::little) {
        out.write(reinterpret_cast<const char*>(values.data()),
                  static_cast<std::streamsize>(values.size() * sizeof(T)));
    } else {
        for (T v : values) {
            const T le = byteswap_if_needed(v);
            out.write(reinterpret_cast<const char*>(&le), sizeof(T));
        }
    }
    if (!out) throw Error(ErrorCode::kIo, "write failed on " + path.string());
}

}  // namespace

Sidecar Sidecar::parse(const std::string& text) {
    Sidecar sc;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw Error(ErrorCode::kMalformedMeta, "line " + std::to_string(lineno) + ": '" + t + "'");
        }
        const std::string key = trim(std::string_view(t).substr(0, eq));
        if (!sc.contains(key)) sc.order_.push_back(key);
        sc.entries_[key] = trim(std::string_view(t).substr(eq + 1));
    }
    return sc;
}

Sidecar Sidecar::read(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string Sidecar::str() const {
    std::string out;
    std::vector<std::string> keys = order_;
    for (const auto& [k, v] : entries_) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
    for (const auto& k : keys) out += k + "=" + entries_.at(k) + "\n";
    return out;
}

void Sidecar::write(const fs::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
    out << str();
    if (!out) throw Error(ErrorCode::kIo, "write failed on " + path.string());
}

std::string Sidecar::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw Error(ErrorCode::kMalformedMeta, "missing key '" + key + "'");
    return it->second;
}

std::int64_t Sidecar::get_int(const std::string& key) const {
    const std::string v = get(key);
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw Error(ErrorCode::kMalformedMeta, "key '" + key + "' is not an integer: '" + v + "'");
    }
    return out;
}

std::optional<std::int64_t> Sidecar::get_int_opt(const std::string& key) const {
    if (!contains(key)) return std::nullopt;
    return get_int(key);
}

bool Sidecar::get_flag(const std::string& key) const {
    const auto v = get_int(key);
    if (v != 0 && v != 1) throw Error(ErrorCode::kMalformedMeta, "key '" + key + "' must be 0 or 1");
    return v == 1;
}

fs::path payload_path(const fs::path& name) { return fs::path(name.string() + ".bin"); }
fs::path meta_path(const fs::path& name) { return fs::path(name.string() + ".meta"); }

DatasetMeta read_dataset_meta(const fs::path& meta) {
    const Sidecar sc = Sidecar::read(meta);
    DatasetMeta out;
    const auto n = sc.get_int("n");
    const auto m = sc.get_int("m");
    if (n < 1 || m < 1) throw Error(ErrorCode::kMalformedMeta, "n and m must be positive");
    out.n = static_cast<std::size_t>(n);
    out.m = static_cast<std::size_t>(m);
    out.znormalized = sc.contains("znormalized") ? sc.get_flag("znormalized") : false;
    out.seed = sc.get_int_opt("seed");
    return out;
}

Dataset load_dataset(const fs::path& payload, const fs::path& meta) {
    const DatasetMeta dm = read_dataset_meta(meta);
    return Dataset(dm.n, dm.m, read_f32(payload, dm.n * dm.m), dm.znormalized);
}

Dataset load_dataset(const fs::path& name) { return load_dataset(payload_path(name), meta_path(name)); }

void save_dataset(const Dataset& dataset, const fs::path& payload, const fs::path& meta,
                  std::optional<std::int64_t> seed) {
    write_f32(payload, dataset.values());
    Sidecar sc;
    sc.set("n", static_cast<std::int64_t>(dataset.size()));
    sc.set("m", static_cast<std::int64_t>(dataset.length()));
    sc.set("znormalized", dataset.znormalized() ? 1 : 0);
    if (seed) sc.set("seed", *seed);
    sc.write(meta);
}

void save_dataset(const Dataset& dataset, const fs::path& name, std::optional<std::int64_t> seed) {
    save_dataset(dataset, payload_path(name), meta_path(name), seed);
}

std::vector<float> read_f32(const fs::path& path, std::size_t expected_count) {
    static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);
    return read_raw<float>(path, expected_count);
}
void write_f32(const fs::path& path, std::span<const float> values) { write_raw(path, values); }
std::vector<std::uint8_t> read_u8(const fs::path& path, std::size_t expected_count) {
    return read_raw<std::uint8_t>(path, expected_count);
}
void write_u8(const fs::path& path, std::span<const std::uint8_t> values) { write_raw(path, values); }
std::vector<std::uint64_t> read_u64(const fs::path& path, std::size_t expected_count) {
    return read_raw<std::uint64_t>(path, expected_count);
}
void write_u64(const fs::path& path, std::span<const std::uint64_t> values) { write_raw(path, values); }

}  // namespace seaidx
