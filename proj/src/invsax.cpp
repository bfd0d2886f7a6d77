#include "seaidx/invsax.hpp"

#include <algorithm>

namespace seaidx {

void invsax_into(std::span<const std::uint8_t> symbols, unsigned bits, std::span<std::uint8_t> out) {
    const std::size_t l = symbols.size();
    if (out.size() != invsax_key_bytes(l, bits)) throw Error(ErrorCode::kShapeMismatch, "key buffer size");
    std::fill(out.begin(), out.end(), std::uint8_t{0});
    std::size_t position = 0;
    for (unsigned level = 0; level < bits; ++level) {
        const unsigned shift = bits - 1 - level;
        for (std::size_t j = 0; j < l; ++j, ++position) {
            if ((symbols[j] >> shift) & 1u) {
                out[position / 8] |= static_cast<std::uint8_t>(0x80u >> (position % 8));
            }
        }
    }
}

InvSaxKey invsax(const SaxWord& word) {
    if (word.bits < 1 || word.bits > kMaxSaxBits) throw Error(ErrorCode::kBadBits, "bits must be in 1..8");
    InvSaxKey key{std::vector<std::uint8_t>(invsax_key_bytes(word.symbols.size(), word.bits)),
                  word.symbols.size() * word.bits};
    invsax_into(word.symbols, word.bits, key.bytes);
    return key;
}

SaxWord deinterleave(const InvSaxKey& key, std::size_t l, unsigned bits) {
    if (key.bit_count != l * bits || key.bytes.size() != invsax_key_bytes(l, bits)) {
        throw Error(ErrorCode::kShapeMismatch, "key does not match (l, bits)");
    }
    SaxWord word{std::vector<std::uint8_t>(l, 0), bits};
    std::size_t position = 0;
    for (unsigned level = 0; level < bits; ++level) {
        for (std::size_t j = 0; j < l; ++j, ++position) {
            word.symbols[j] = static_cast<std::uint8_t>((word.symbols[j] << 1) | (key.bit(position) ? 1u : 0u));
        }
    }
    return word;
}

std::vector<std::uint8_t> invsax_keys(const SaxWordArray& words) {
    const std::size_t width = invsax_key_bytes(words.l, words.bits);
    std::vector<std::uint8_t> keys(words.n * width);
    for (std::size_t i = 0; i < words.n; ++i) {
        invsax_into(words.word(i), words.bits, std::span<std::uint8_t>(keys.data() + i * width, width));
    }
    return keys;
}

}  // namespace seaidx
