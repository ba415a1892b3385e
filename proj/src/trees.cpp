#include "norton/trees.hpp"

#include "norton/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace norton {

namespace {
constexpr std::string_view kLeafGlyph = "\xE2\x80\xA2"; // U+2022
}

struct BinaryTree::Node {
    BinaryTree left;
    BinaryTree right;
    std::size_t leaves;
};

BinaryTree BinaryTree::leaf() { return BinaryTree(nullptr); }

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    std::size_t leaves = left.leaf_count() + right.leaf_count();
    return BinaryTree(std::make_shared<const Node>(Node{std::move(left), std::move(right), leaves}));
}

const BinaryTree& BinaryTree::left() const {
    if (!node_) throw std::logic_error("leaf has no children");
    return node_->left;
}

const BinaryTree& BinaryTree::right() const {
    if (!node_) throw std::logic_error("leaf has no children");
    return node_->right;
}

std::size_t BinaryTree::leaf_count() const { return node_ ? node_->leaves : 1; }

std::string BinaryTree::to_string() const {
    if (is_leaf()) return std::string(kLeafGlyph);
    return "(" + left().to_string() + right().to_string() + ")";
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() || b.is_leaf()) return false;
    return a.leaf_count() == b.leaf_count() && a.left() == b.left() && a.right() == b.right();
}

BinaryTree BinaryTree::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("bad tree string: ") + why + " at offset " +
                                    std::to_string(pos));
    };
    auto parse_rec = [&](auto& self) -> BinaryTree {
        if (text.substr(pos, kLeafGlyph.size()) == kLeafGlyph) {
            pos += kLeafGlyph.size();
            return leaf();
        }
        if (pos >= text.size() || text[pos] != '(') fail("expected leaf or '('");
        ++pos;
        BinaryTree l = self(self);
        BinaryTree r = self(self);
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        return node(std::move(l), std::move(r));
    };
    BinaryTree t = parse_rec(parse_rec);
    if (pos != text.size()) fail("trailing characters");
    return t;
}

bool DepthSequence::satisfies_kraft() const {
    if (depths.empty()) return false;
    int max_depth = 0;
    for (int d : depths) {
        if (d < 0) return false;
        max_depth = std::max(max_depth, d);
    }
    BigInt sum = 0;
    for (int d : depths) {
        BigInt term = 1;
        term <<= static_cast<mp_bitcnt_t>(max_depth - d);
        sum += term;
    }
    BigInt whole = 1;
    whole <<= static_cast<mp_bitcnt_t>(max_depth);
    return sum == whole;
}

DepthSequence DepthSequence::mod2() const {
    DepthSequence out = *this;
    for (int& d : out.depths) d &= 1;
    return out;
}

std::string DepthSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < depths.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(depths[i]);
    }
    return out;
}

DepthSequence DepthSequence::parse(std::string_view text) {
    DepthSequence out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string field(text.substr(start, comma - start));
        if (field.empty()) throw std::invalid_argument("empty depth field");
        out.depths.push_back(std::stoi(field));
        start = comma + 1;
    }
    return out;
}

BigInt catalan(unsigned n) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    return c / (n + 1);
}

namespace {

void check_limit(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw BudgetExceeded("refusing to enumerate trees with " + std::to_string(n + 1) +
                             " leaves (limit " + std::to_string(limit) + " internal nodes)");
}

} // namespace

std::vector<BinaryTree> enumerate_trees(std::size_t n, std::size_t limit) {
    check_limit(n, limit);
    std::vector<std::vector<BinaryTree>> by_size(n + 1);
    by_size[0] = {BinaryTree::leaf()};
    for (std::size_t s = 1; s <= n; ++s) {
        for (std::size_t k = 0; k < s; ++k) {
            for (const auto& l : by_size[k])
                for (const auto& r : by_size[s - 1 - k]) by_size[s].push_back(BinaryTree::node(l, r));
        }
    }
    return by_size[n];
}

DepthSequence depth_sequence(const BinaryTree& t) {
    DepthSequence out;
    out.depths.reserve(t.leaf_count());
    auto walk = [&](auto& self, const BinaryTree& node, int depth) -> void {
        if (node.is_leaf()) {
            out.depths.push_back(depth);
            return;
        }
        self(self, node.left(), depth + 1);
        self(self, node.right(), depth + 1);
    };
    walk(walk, t, 0);
    return out;
}

std::set<DepthSequence> depth_set(std::size_t n, std::size_t limit) {
    check_limit(n, limit);
    std::vector<std::set<DepthSequence>> sets(n + 1);
    sets[0].insert(DepthSequence{{0}});
    for (std::size_t s = 0; s < n; ++s) {
        // builds D_{s+1}
        for (std::size_t k = 0; k <= s; ++k) {
            for (const auto& left : sets[k]) {
                for (const auto& right : sets[s - k]) {
                    DepthSequence joined;
                    joined.depths.reserve(left.size() + right.size());
                    for (int d : left.depths) joined.depths.push_back(d + 1);
                    for (int d : right.depths) joined.depths.push_back(d + 1);
                    sets[s + 1].insert(std::move(joined));
                }
            }
        }
    }
    return sets[n];
}

BinaryTree tree_from_depths(const DepthSequence& d) {
    if (!d.satisfies_kraft())
        throw std::invalid_argument("not a depth sequence: " + d.to_string());
    std::vector<std::pair<int, BinaryTree>> forest;
    forest.reserve(d.size());
    for (int depth : d.depths) forest.emplace_back(depth, BinaryTree::leaf());
    while (forest.size() > 1) {
        auto deepest = std::max_element(forest.begin(), forest.end(),
                                        [](const auto& a, const auto& b) { return a.first < b.first; });
        auto sibling = std::next(deepest);
        if (sibling == forest.end() || sibling->first != deepest->first)
            throw std::invalid_argument("not a depth sequence: " + d.to_string());
        deepest->second = BinaryTree::node(deepest->second, sibling->second);
        deepest->first -= 1;
        forest.erase(sibling);
    }
    if (forest.front().first != 0) throw std::invalid_argument("not a depth sequence: " + d.to_string());
    return forest.front().second;
}

BinaryTree left_comb(std::size_t leaves) {
    if (leaves == 0) throw std::invalid_argument("a tree has at least one leaf");
    BinaryTree t = BinaryTree::leaf();
    for (std::size_t i = 1; i < leaves; ++i) t = BinaryTree::node(t, BinaryTree::leaf());
    return t;
}

BinaryTree right_comb(std::size_t leaves) {
    if (leaves == 0) throw std::invalid_argument("a tree has at least one leaf");
    BinaryTree t = BinaryTree::leaf();
    for (std::size_t i = 1; i < leaves; ++i) t = BinaryTree::node(BinaryTree::leaf(), t);
    return t;
}

} // namespace norton
