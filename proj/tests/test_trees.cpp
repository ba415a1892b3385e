#include "norton/errors.hpp"
#include "norton/trees.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace norton;

namespace {

BigInt catalan_by_product(unsigned n) {
    // C_n = prod_{k=2}^{n} (n+k)/k
    mpq_class c = 1;
    for (unsigned k = 2; k <= n; ++k) {
        mpq_class f(n + k, k);
        f.canonicalize();
        c *= f;
    }
    return c.get_num();
}

// Ordered depth sequences of full binary trees, recognised by splitting into two
// halves recursively (the halves are the subtrees under the root).
bool is_tree_sequence(const std::vector<int>& d, std::size_t lo, std::size_t hi, int offset) {
    if (hi - lo == 1) return d[lo] == offset;
    for (std::size_t mid = lo + 1; mid < hi; ++mid)
        if (is_tree_sequence(d, lo, mid, offset + 1) && is_tree_sequence(d, mid, hi, offset + 1)) return true;
    return false;
}

std::set<DepthSequence> brute_force_depth_set(std::size_t n) {
    std::set<DepthSequence> out;
    std::vector<int> d(n + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == d.size()) {
            if (is_tree_sequence(d, 0, d.size(), 0)) out.insert(DepthSequence{d});
            return;
        }
        for (int v = n == 0 ? 0 : 1; v <= static_cast<int>(n); ++v) {
            d[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(6) == 132);
    CHECK(catalan(6) == static_cast<long>(enumerate_trees(6).size()));
    for (unsigned n = 0; n <= 30; ++n) CHECK(catalan(n) == catalan_by_product(n));
}

TEST_CASE("enumeration order and counts") {
    auto t0 = enumerate_trees(0);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].is_leaf());

    auto t2 = enumerate_trees(2);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0].to_string() == "(•(••))");
    CHECK(t2[1].to_string() == "((••)•)");

    for (std::size_t n = 0; n <= 10; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(BigInt(static_cast<unsigned long>(trees.size())) == catalan(static_cast<unsigned>(n)));
        std::set<std::string> distinct;
        for (const auto& t : trees) {
            CHECK(t.leaf_count() == n + 1);
            CHECK(t.internal_count() == n);
            distinct.insert(t.to_string());
        }
        CHECK(distinct.size() == trees.size());
    }
}

TEST_CASE("enumeration limit") {
    CHECK_THROWS_AS(enumerate_trees(13), BudgetExceeded);
    CHECK_THROWS_AS(depth_set(13), BudgetExceeded);
    CHECK(enumerate_trees(4, 4).size() == 14);
    CHECK_THROWS_AS(enumerate_trees(5, 4), BudgetExceeded);
}

TEST_CASE("tree parsing round trip") {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n)) CHECK(BinaryTree::parse(t.to_string()) == t);
    CHECK_THROWS(BinaryTree::parse("(••"));
    CHECK_THROWS(BinaryTree::parse("(•••)"));
    CHECK_THROWS(BinaryTree::parse(""));
}

TEST_CASE("depth sequences") {
    CHECK(depth_sequence(BinaryTree::leaf()).depths == std::vector<int>{0});
    CHECK(depth_sequence(left_comb(3)).depths == std::vector<int>{2, 2, 1});
    CHECK(depth_sequence(right_comb(3)).depths == std::vector<int>{1, 2, 2});
    auto pair = BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf());
    CHECK(depth_sequence(BinaryTree::node(pair, pair)).depths == std::vector<int>{2, 2, 2, 2});
    CHECK(depth_sequence(left_comb(3)).to_string() == "2,2,1");
    CHECK(DepthSequence::parse("2,2,1") == depth_sequence(left_comb(3)));
    CHECK(DepthSequence{{2, 2, 1}}.mod2().depths == std::vector<int>{0, 0, 1});
    CHECK_FALSE(DepthSequence{{1, 1, 1}}.satisfies_kraft());
    CHECK(DepthSequence{{1, 2, 3, 3}}.satisfies_kraft());
}

TEST_CASE("depth_set recursion matches the image of depth_sequence") {
    CHECK(depth_set(0) == std::set<DepthSequence>{DepthSequence{{0}}});
    CHECK(depth_set(1) == std::set<DepthSequence>{DepthSequence{{1, 1}}});
    for (std::size_t n = 0; n <= 8; ++n) {
        auto trees = enumerate_trees(n);
        std::set<DepthSequence> image;
        for (const auto& t : trees) {
            auto d = depth_sequence(t);
            CHECK(d.satisfies_kraft());
            image.insert(d);
        }
        CHECK(image.size() == trees.size()); // injective
        auto ds = depth_set(n);
        CHECK(ds == image);
        CHECK(BigInt(static_cast<unsigned long>(ds.size())) == catalan(static_cast<unsigned>(n)));
        for (const auto& d : ds) CHECK(d.satisfies_kraft());
    }
}

TEST_CASE("depth sets agree with a brute-force recogniser") {
    for (std::size_t n = 0; n <= 6; ++n) CHECK(depth_set(n) == brute_force_depth_set(n));
}

TEST_CASE("tree_from_depths inverts depth_sequence") {
    for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& t : enumerate_trees(n)) CHECK(tree_from_depths(depth_sequence(t)) == t);
    CHECK_THROWS(tree_from_depths(DepthSequence{{2, 1, 2}}));
    CHECK_THROWS(tree_from_depths(DepthSequence{{1, 1, 1}}));
    CHECK_THROWS(tree_from_depths(DepthSequence{{}}));
}
