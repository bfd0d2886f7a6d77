#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seaidx/summarization.hpp"

namespace seaidx {

inline constexpr std::size_t kDefaultLeafSize = 100;

/// Node of the iSAX tree. `bits[j]` is the cardinality level of segment j and
/// `prefix[j]` the top bits[j] bits every member's symbol j shares.
struct IsaxNode {
    std::vector<std::uint8_t> bits;
    std::vector<std::uint8_t> prefix;
    std::int32_t parent = -1;
    std::vector<std::int32_t> children;  // materialized children only, in key order
    std::int32_t split_segment = -1;     // promoted segment of a binary split; -1 at the root
    std::uint32_t depth = 0;
    std::vector<std::uint32_t> ids;  // leaf payload, insertion order
    bool unsplittable = false;

    bool is_leaf() const noexcept { return children.empty(); }
};

struct TreeStats {
    std::size_t leaves = 0;
    std::size_t max_leaf = 0;
    std::size_t unsplittable = 0;
    std::size_t depth = 0;

    std::string str() const;
};

/// In-memory iSAX tree over a fixed array of SAX words.
///
/// The root starts as a leaf. Once it overflows it fans out by the first bit of
/// every segment (children materialized only for combinations present); any
/// deeper overflow promotes one more bit of the segment with the lowest level,
/// ties to the lowest position. That promotion order is the InvSAX bit order,
/// so every node covers a contiguous range of InvSAX-sorted series.
class IsaxTree {
public:
    static IsaxTree build(const SaxWordArray& words, std::size_t leaf_size, SummaryKind kind = SummaryKind::kPaa);

    std::size_t size() const noexcept { return n_; }
    std::size_t segments() const noexcept { return l_; }
    unsigned bits() const noexcept { return bits_; }
    std::size_t leaf_size() const noexcept { return leaf_size_; }
    SummaryKind kind() const noexcept { return kind_; }

    const IsaxNode& node(std::size_t index) const { return nodes_[index]; }
    std::size_t node_count() const noexcept { return nodes_.size(); }

    /// Child node indices of the root (a single entry, the root itself, while it is a leaf).
    const std::vector<std::int32_t>& top_level() const noexcept { return top_level_; }

    /// Indices of all (non-empty) leaves in construction order.
    const std::vector<std::int32_t>& leaves() const noexcept { return leaves_; }

    /// Leaf node index holding series `id`.
    std::int32_t leaf_of(std::size_t id) const { return leaf_of_[id]; }

    const SaxWordArray& words() const noexcept { return words_; }

    /// MINDIST from a query in index units to the region of `node_index`.
    double mindist(std::span<const double> query_units, std::size_t source_length, std::size_t node_index) const;

    TreeStats stats() const;

private:
    void split(std::int32_t node_index);
    std::int32_t add_node(IsaxNode node);

    std::size_t n_ = 0;
    std::size_t l_ = 0;
    unsigned bits_ = 0;
    std::size_t leaf_size_ = 0;
    SummaryKind kind_ = SummaryKind::kPaa;
    SaxWordArray words_;
    std::vector<IsaxNode> nodes_;
    std::vector<std::int32_t> top_level_;
    std::vector<std::int32_t> leaves_;
    std::vector<std::int32_t> leaf_of_;
};

}  // namespace seaidx
