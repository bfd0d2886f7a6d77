#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seaidx/series.hpp"

namespace seaidx {

namespace fs = std::filesystem;

/// Ordered key=value sidecar. Blank lines and lines starting with '#' are ignored.
class Sidecar {
public:
    static Sidecar parse(const std::string& text);
    static Sidecar read(const fs::path& path);
    void write(const fs::path& path) const;
    std::string str() const;

    bool contains(const std::string& key) const { return entries_.count(key) != 0; }
    void set(const std::string& key, const std::string& value) { entries_[key] = value; }
    void set(const std::string& key, std::int64_t value) { entries_[key] = std::to_string(value); }

    std::string get(const std::string& key) const;
    std::int64_t get_int(const std::string& key) const;
    std::optional<std::int64_t> get_int_opt(const std::string& key) const;
    bool get_flag(const std::string& key) const;

private:
    std::map<std::string, std::string> entries_;
    std::vector<std::string> order_;
};

struct DatasetMeta {
    std::size_t n = 0;
    std::size_t m = 0;
    bool znormalized = false;
    std::optional<std::int64_t> seed;
};

/// Paths for a `<name>.bin` / `<name>.meta` pair.
fs::path payload_path(const fs::path& name);
fs::path meta_path(const fs::path& name);

DatasetMeta read_dataset_meta(const fs::path& meta);
Dataset load_dataset(const fs::path& payload, const fs::path& meta);
Dataset load_dataset(const fs::path& name);
void save_dataset(const Dataset& dataset, const fs::path& payload, const fs::path& meta,
                  std::optional<std::int64_t> seed = std::nullopt);
void save_dataset(const Dataset& dataset, const fs::path& name,
                  std::optional<std::int64_t> seed = std::nullopt);

// Raw little-endian array helpers shared by every payload format.
std::vector<float> read_f32(const fs::path& path, std::size_t expected_count);
void write_f32(const fs::path& path, std::span<const float> values);
std::vector<std::uint8_t> read_u8(const fs::path& path, std::size_t expected_count);
void write_u8(const fs::path& path, std::span<const std::uint8_t> values);
std::vector<std::uint64_t> read_u64(const fs::path& path, std::size_t expected_count);
void write_u64(const fs::path& path, std::span<const std::uint64_t> values);

}  // namespace seaidx
