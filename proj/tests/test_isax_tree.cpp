#include "doctest.h"

#include <algorithm>
#include <set>

#include "seaidx/datagen.hpp"
#include "seaidx/invsax.hpp"
#include "seaidx/isax_tree.hpp"
#include "seaidx/sampling.hpp"

using namespace seaidx;

namespace {

// Every member's symbols, cut to the node's per-segment levels, equal the node prefix.
bool prefix_matches(const SaxWordArray& words, const IsaxNode& node, std::size_t id) {
    const auto w = words.word(id);
    for (std::size_t j = 0; j < words.l; ++j) {
        if ((w[j] >> (words.bits - node.bits[j])) != node.prefix[j]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("small datasets live in a single root leaf") {
    const Dataset d = gen_randwalk(50, 64, 1);
    const auto tree = IsaxTree::build(sax_words(summarize_paa(d, 8), 8), 100);
    CHECK(tree.leaves().size() == 1);
    CHECK(tree.leaves().front() == 0);
    CHECK(tree.node(0).ids.size() == 50);
    CHECK(tree.stats().depth == 0);
}

TEST_CASE("complementary first bits split at depth 1") {
    SaxWordArray words{2, 2, 8, {0x00, 0x00, 0xFF, 0xFF}};
    CHECK(IsaxTree::build(words, 2).leaves().size() == 1);  // n <= h
    const auto tree = IsaxTree::build(words, 1);
    REQUIRE(tree.leaves().size() == 2);
    for (auto leaf : tree.leaves()) CHECK(tree.node(static_cast<std::size_t>(leaf)).depth == 1);

    SaxWordArray three{3, 2, 8, {0x00, 0x00, 0xFF, 0xFF, 0x01, 0x02}};
    const auto t3 = IsaxTree::build(three, 2);
    // Root overflows (3 > 2) and fans out on first bits into two depth-1 leaves.
    CHECK(t3.leaves().size() == 2);
    for (auto leaf : t3.leaves()) CHECK(t3.node(static_cast<std::size_t>(leaf)).depth == 1);
    CHECK(t3.leaf_of(0) == t3.leaf_of(2));
    CHECK(t3.leaf_of(0) != t3.leaf_of(1));
}

TEST_CASE("leaf membership matches prefixes on 10,000 random walks") {
    const Dataset d = gen_randwalk(10000, 128, 42);
    const auto words = sax_words(summarize_paa(d, 16), 8);
    const auto tree = IsaxTree::build(words, 100);

    std::vector<int> seen(d.size(), 0);
    for (auto leaf : tree.leaves()) {
        const auto& node = tree.node(static_cast<std::size_t>(leaf));
        CHECK(node.is_leaf());
        CHECK(!node.ids.empty());
        CHECK((node.ids.size() <= 100 || node.unsplittable));
        for (auto id : node.ids) {
            ++seen[id];
            CHECK(tree.leaf_of(id) == leaf);
        }
    }
    // Disjoint cover of all ids.
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));

    // Independent re-filter oracle: for every node, the ids whose words match the
    // prefix are exactly the ids stored beneath it.
    for (std::size_t index = 0; index < tree.node_count(); ++index) {
        const auto& node = tree.node(index);
        std::vector<std::uint32_t> below;
        std::vector<std::size_t> stack{index};
        while (!stack.empty()) {
            const auto& cur = tree.node(stack.back());
            stack.pop_back();
            below.insert(below.end(), cur.ids.begin(), cur.ids.end());
            for (auto c : cur.children) stack.push_back(static_cast<std::size_t>(c));
        }
        std::sort(below.begin(), below.end());
        std::vector<std::uint32_t> matching;
        for (std::size_t id = 0; id < d.size(); ++id) {
            if (prefix_matches(words, node, id)) matching.push_back(static_cast<std::uint32_t>(id));
        }
        CHECK(below == matching);
        if (index > 200) break;  // the full node scan is quadratic; the first levels are enough
    }
    for (auto leaf : tree.leaves()) {
        for (auto id : tree.node(static_cast<std::size_t>(leaf)).ids) {
            CHECK(prefix_matches(words, tree.node(static_cast<std::size_t>(leaf)), id));
        }
    }
}

TEST_CASE("leaves are contiguous runs of the InvSAX order") {
    const Dataset d = gen_fseries(5000, 64, 10, 10.0, 9);
    const auto words = sax_words(summarize_paa(d, 16), 8);
    const auto tree = IsaxTree::build(words, 50);
    const auto order = invsax_order(words);
    std::set<std::int32_t> closed;
    std::int32_t current = tree.leaf_of(order[0]);
    for (auto id : order) {
        const auto leaf = tree.leaf_of(id);
        if (leaf != current) {
            closed.insert(current);
            CHECK(closed.count(leaf) == 0);
            current = leaf;
        }
    }
}

TEST_CASE("identical words overflow into a flagged unsplittable leaf") {
    SaxWordArray words{10, 2, 2, std::vector<std::uint8_t>(20, 1)};
    const auto tree = IsaxTree::build(words, 3);
    const auto stats = tree.stats();
    CHECK(stats.leaves == 1);
    CHECK(stats.unsplittable == 1);
    CHECK(stats.max_leaf == 10);
    CHECK(stats.depth == 3);  // root fan-out plus one promotion per segment at 2 bits
    CHECK(stats.str() == "leaves=1 max_leaf=10 unsplittable=1 depth=3");
    CHECK_THROWS_AS(IsaxTree::build(words, 0), Error);
}

TEST_CASE("split promotes the lowest level, lowest position first") {
    // Words share all first bits, then differ only in segment 1's second bit.
    SaxWordArray words{4, 2, 3, {0b000, 0b000, 0b000, 0b010, 0b001, 0b000, 0b001, 0b010}};
    const auto tree = IsaxTree::build(words, 2);
    const auto& top = tree.node(static_cast<std::size_t>(tree.top_level().front()));
    REQUIRE(tree.top_level().size() == 1);
    CHECK(top.split_segment == 0);  // segment 0 promoted first (no separation)
    const auto& next = tree.node(static_cast<std::size_t>(top.children.front()));
    CHECK(next.split_segment == 1);
    CHECK(tree.leaves().size() == 2);
}
