#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "seaidx/summarization.hpp"

namespace seaidx {

/// Bit-interleaved SAX word: bit i*l + j of the key is bit i (0 = most
/// significant) of symbol j. Packed MSB-first into bytes, zero-padded to a
/// whole byte, so lexicographic byte order is the key order.
struct InvSaxKey {
    std::vector<std::uint8_t> bytes;
    std::size_t bit_count = 0;

    bool bit(std::size_t position) const {
        return (bytes[position / 8] >> (7 - position % 8)) & 1u;
    }

    auto operator<=>(const InvSaxKey& other) const { return bytes <=> other.bytes; }
    bool operator==(const InvSaxKey& other) const = default;
};

inline std::size_t invsax_key_bytes(std::size_t l, unsigned bits) { return (l * bits + 7) / 8; }

/// Writes the key of `symbols` (each < 2^bits) into `out`, which must hold
/// invsax_key_bytes(l, bits) bytes.
void invsax_into(std::span<const std::uint8_t> symbols, unsigned bits, std::span<std::uint8_t> out);

InvSaxKey invsax(const SaxWord& word);

/// Recovers the SAX word from its key.
SaxWord deinterleave(const InvSaxKey& key, std::size_t l, unsigned bits);

/// Keys of every word, packed back to back (n * invsax_key_bytes(l, bits) bytes).
std::vector<std::uint8_t> invsax_keys(const SaxWordArray& words);

}  // namespace seaidx
