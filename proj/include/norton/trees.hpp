#pragma once

#include "norton/rational.hpp"

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace norton {

inline constexpr std::size_t kDefaultEnumerationLimit = 12;

/*
 * Full binary tree; the leaves are labeled 0..n in preorder.
 * Immutable, with shared subtrees, so copies are cheap.
 */
class BinaryTree {
public:
    static BinaryTree leaf();
    static BinaryTree node(BinaryTree left, BinaryTree right);

    // Inverse of to_string(); leaves are "•", nodes "(" left right ")".
    static BinaryTree parse(std::string_view text);

    bool is_leaf() const { return !node_; }
    const BinaryTree& left() const;
    const BinaryTree& right() const;

    std::size_t leaf_count() const;
    std::size_t internal_count() const { return leaf_count() - 1; }

    std::string to_string() const;

    friend bool operator==(const BinaryTree& a, const BinaryTree& b);

private:
    struct Node;
    explicit BinaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct DepthSequence {
    std::vector<int> depths;

    std::size_t size() const { return depths.size(); }
    int operator[](std::size_t i) const { return depths[i]; }

    // Kraft equality sum 2^-d_i == 1, the characterization of full binary tree depth sequences.
    bool satisfies_kraft() const;
    DepthSequence mod2() const;
    std::string to_string() const; // "2,2,1"
    static DepthSequence parse(std::string_view text);

    auto operator<=>(const DepthSequence&) const = default;
};

BigInt catalan(unsigned n);

// All C_n trees with n+1 leaves in split-position order: for k = 0..n-1 the left
// subtree has k+1 leaves; left subtrees vary slowest.
std::vector<BinaryTree> enumerate_trees(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

DepthSequence depth_sequence(const BinaryTree& t);

// D_n built by the split recursion D_{n+1} = U_k {(d+1, d'+1) : d in D_k, d' in D_{n-k}}.
std::set<DepthSequence> depth_set(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

// Rebuilds the tree with the given depth sequence by repeatedly contracting the
// leftmost deepest leaf with its right sibling. Throws if the sequence is not a
// full binary tree depth sequence.
BinaryTree tree_from_depths(const DepthSequence& d);

BinaryTree left_comb(std::size_t leaves);
BinaryTree right_comb(std::size_t leaves);

} // namespace norton
