#pragma once

#include <filesystem>

#include "seaidx/summarization.hpp"

namespace seaidx {

/// Summary vectors use the dataset layout: `<name>.bin` holds n x l float32
/// values and `<name>.meta` carries n, m (= l), source_m, scaled and kind.
void save_summaries(const Summaries& summaries, const std::filesystem::path& name);

/// Loads a summary file. DEA rows written unscaled (scaled=0, e.g. a raw
/// embedding export) are passed through dea_scale on the way in.
Summaries load_summaries(const std::filesystem::path& name);

/// `<name>.sax` holds n x l uint8 symbols; `<name>.sax.meta` has n, l, bits.
void save_sax(const SaxWordArray& words, const std::filesystem::path& name);
SaxWordArray load_sax(const std::filesystem::path& name);

}  // namespace seaidx
