#include "seaidx/isax_tree.hpp"

#include <algorithm>
#include <map>

namespace seaidx {

std::string TreeStats::str() const {
    return "leaves=" + std::to_string(leaves) + " max_leaf=" + std::to_string(max_leaf) +
           " unsplittable=" + std::to_string(unsplittable) + " depth=" + std::to_string(depth);
}

std::int32_t IsaxTree::add_node(IsaxNode node) {
    nodes_.push_back(std::move(node));
    return static_cast<std::int32_t>(nodes_.size() - 1);
}

IsaxTree IsaxTree::build(const SaxWordArray& words, std::size_t leaf_size, SummaryKind kind) {
    if (leaf_size < 1) throw Error(ErrorCode::kInvalidArgument, "leaf size must be at least 1");
    if (words.l == 0 || words.bits < 1 || words.bits > kMaxSaxBits) {
        throw Error(ErrorCode::kBadBits, "words need l >= 1 and 1..8 bits");
    }
    if (words.symbols.size() != words.n * words.l) throw Error(ErrorCode::kShapeMismatch, "word array size");

    IsaxTree tree;
    tree.n_ = words.n;
    tree.l_ = words.l;
    tree.bits_ = words.bits;
    tree.leaf_size_ = leaf_size;
    tree.kind_ = kind;
    tree.words_ = words;

    IsaxNode root;
    root.bits.assign(words.l, 0);
    root.prefix.assign(words.l, 0);
    root.ids.resize(words.n);
    for (std::size_t i = 0; i < words.n; ++i) root.ids[i] = static_cast<std::uint32_t>(i);
    tree.add_node(std::move(root));

    if (words.n > leaf_size) {
        // Root fan-out on the first bit of every segment.
        std::map<std::vector<std::uint8_t>, std::vector<std::uint32_t>> groups;
        std::vector<std::uint8_t> key(words.l);
        const unsigned shift = words.bits - 1;
        for (std::uint32_t id : tree.nodes_[0].ids) {
            const auto w = words.word(id);
            for (std::size_t j = 0; j < words.l; ++j) key[j] = static_cast<std::uint8_t>(w[j] >> shift);
            groups[key].push_back(id);
        }
        tree.nodes_[0].ids.clear();
        tree.nodes_[0].ids.shrink_to_fit();
        for (auto& [prefix, ids] : groups) {
            IsaxNode child;
            child.bits.assign(words.l, 1);
            child.prefix = prefix;
            child.parent = 0;
            child.depth = 1;
            child.ids = std::move(ids);
            const auto index = tree.add_node(std::move(child));
            tree.nodes_[0].children.push_back(index);
        }
        std::vector<std::int32_t> pending = tree.nodes_[0].children;
        while (!pending.empty()) {
            const auto index = pending.back();
            pending.pop_back();
            if (tree.nodes_[index].ids.size() <= leaf_size) continue;
            tree.split(index);
            for (auto c : tree.nodes_[index].children) pending.push_back(c);
        }
        tree.top_level_ = tree.nodes_[0].children;
    } else {
        tree.top_level_ = {0};
    }

    // Leaves in key order.
    tree.leaf_of_.assign(words.n, -1);
    std::vector<std::int32_t> stack = {0};
    while (!stack.empty()) {
        const auto index = stack.back();
        stack.pop_back();
        const auto& node = tree.nodes_[index];
        if (node.is_leaf()) {
            if (node.ids.empty()) continue;
            tree.leaves_.push_back(index);
            for (auto id : node.ids) tree.leaf_of_[id] = index;
        } else {
            for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.push_back(*it);
        }
    }
    return tree;
}

void IsaxTree::split(std::int32_t node_index) {
    std::int32_t segment = -1;
    {
        const auto& node = nodes_[node_index];
        for (std::size_t j = 0; j < l_; ++j) {
            if (node.bits[j] < bits_ && (segment < 0 || node.bits[j] < node.bits[segment])) {
                segment = static_cast<std::int32_t>(j);
            }
        }
    }
    if (segment < 0) {
        nodes_[node_index].unsplittable = true;
        return;
    }

    const unsigned level = nodes_[node_index].bits[segment];
    const unsigned shift = bits_ - level - 1;
    std::vector<std::uint32_t> halves[2];
    for (std::uint32_t id : nodes_[node_index].ids) {
        halves[(words_.word(id)[segment] >> shift) & 1u].push_back(id);
    }
    nodes_[node_index].split_segment = segment;
    nodes_[node_index].ids.clear();
    nodes_[node_index].ids.shrink_to_fit();
    for (unsigned bit = 0; bit < 2; ++bit) {
        if (halves[bit].empty()) continue;
        IsaxNode child;
        child.bits = nodes_[node_index].bits;
        child.prefix = nodes_[node_index].prefix;
        child.bits[segment] = static_cast<std::uint8_t>(level + 1);
        child.prefix[segment] = static_cast<std::uint8_t>((child.prefix[segment] << 1) | bit);
        child.parent = node_index;
        child.depth = nodes_[node_index].depth + 1;
        child.ids = std::move(halves[bit]);
        const auto index = add_node(std::move(child));
        nodes_[node_index].children.push_back(index);
    }
}

double IsaxTree::mindist(std::span<const double> query_units, std::size_t source_length,
                         std::size_t node_index) const {
    const auto& node = nodes_[node_index];
    return mindist_prefix(query_units, source_length, node.prefix, node.bits);
}

TreeStats IsaxTree::stats() const {
    TreeStats s;
    s.leaves = leaves_.size();
    for (auto index : leaves_) {
        const auto& node = nodes_[index];
        s.max_leaf = std::max(s.max_leaf, node.ids.size());
        s.depth = std::max<std::size_t>(s.depth, node.depth);
        if (node.unsplittable) ++s.unsplittable;
    }
    return s;
}

}  // namespace seaidx
