#pragma once

#include "norton/matrix.hpp"
#include "norton/rational.hpp"
#include "norton/trees.hpp"

#include <json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace norton {

inline constexpr std::size_t kDefaultFingerprintBudget = 1'000'000;

/*
 * A binary operation on Q^dim given by coordinates.
 *
 * Bilinear form: (x * y)_k = sum_{i,j} x_i y_j C[i][j][k].
 * Linear form:   x * y = L x + R y. The double minus operation a*b = -a-b is
 * of this kind; it is not bilinear, so it gets its own fingerprint rule.
 */
class BilinearOperation {
public:
    enum class Form { bilinear, linear };

    static BilinearOperation bilinear(std::size_t dim, Vector constants);
    static BilinearOperation zero(std::size_t dim);
    static BilinearOperation linear(RationalMatrix left, RationalMatrix right);

    std::size_t dimension() const { return dim_; }
    Form form() const { return form_; }

    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim_ + j) * dim_ + k];
    }
    const Vector& constants() const { return constants_; }
    const RationalMatrix& left_map() const { return left_; }
    const RationalMatrix& right_map() const { return right_; }

    Vector apply(const Vector& x, const Vector& y) const;
    bool is_commutative() const;

    friend bool operator==(const BilinearOperation&, const BilinearOperation&) = default;

private:
    BilinearOperation() = default;

    Form form_ = Form::bilinear;
    std::size_t dim_ = 0;
    Vector constants_;
    RationalMatrix left_;
    RationalMatrix right_;
};

// 1-dimensional a*b = -a-b.
BilinearOperation double_minus_operation();

// Block-diagonal (r,s)*(r',s') = (r*r', s o s'); both operands must have the same form.
BilinearOperation direct_product(const BilinearOperation& a, const BilinearOperation& b);

// Re-expresses a bilinear operation in the basis whose i-th vector has old coordinates
// given by column i of `new_basis` (which must be invertible).
BilinearOperation change_basis(const BilinearOperation& op, const RationalMatrix& new_basis);

Vector evaluate_parenthesization(const BilinearOperation& op, const BinaryTree& t,
                                 std::span<const Vector> args);

/*
 * Canonical coordinates of the map computed by parenthesization t.
 * Bilinear: values on all basis tuples, lexicographic in the index tuple
 * (dim^(m+1) vectors of length dim). Linear: the matrix attached to each leaf,
 * leaf-major. Equal fingerprints iff equal maps.
 *
 * The budget bounds the number of rational entries produced (dim^(m+2) for the
 * bilinear form); exceeding it throws BudgetExceeded.
 */
Vector tensor_fingerprint(const BilinearOperation& op, const BinaryTree& t,
                          std::size_t budget = kDefaultFingerprintBudget);

std::size_t fingerprint_size(const BilinearOperation& op, std::size_t m);

enum class EquivalenceMethod { tensor_exact, depth_mod2, pattern_certified };
std::string to_string(EquivalenceMethod m);

// Evidence that two trees differ: the one-off assignment at position r separates them.
struct DistinctnessCertificate {
    std::size_t tree_a = 0;
    std::size_t tree_b = 0;
    std::size_t position = 0;
    std::size_t pattern = 0; // index of the (u, v) pattern pair used
    Vector value_a;
    Vector value_b;
};

enum class MergeBacking { fingerprint_verified, theorem_backed };
std::string to_string(MergeBacking b);

struct MergeRecord {
    std::size_t representative = 0;
    std::size_t member = 0;
    MergeBacking backing = MergeBacking::fingerprint_verified;
};

struct EquivalenceReport {
    std::size_t m = 0;
    EquivalenceMethod method = EquivalenceMethod::tensor_exact;
    // Indices into enumerate_trees(m); each class sorted, classes sorted by first member.
    std::vector<std::vector<std::size_t>> classes;
    std::vector<DistinctnessCertificate> certificates;
    std::vector<MergeRecord> merges;

    std::size_t class_count() const { return classes.size(); }
};

nlohmann::json to_json(const EquivalenceReport& r);

// Groups arbitrary trees (all with the same leaf count) by exact fingerprint.
std::vector<std::vector<std::size_t>> group_by_fingerprint(const BilinearOperation& op,
                                                           std::span<const BinaryTree> trees,
                                                           std::size_t budget = kDefaultFingerprintBudget);

EquivalenceReport count_classes_exact(const BilinearOperation& op, std::size_t m,
                                      std::size_t budget = kDefaultFingerprintBudget);

EquivalenceReport double_minus_classes(std::size_t m, std::size_t limit = kDefaultEnumerationLimit);

// floor(2^(m+1)/3), OEIS A000975; m = 0 is rejected.
BigInt a000975_value(std::size_t m);

// Sorts members and classes into the canonical report order and checks 1 <= count <= C_m.
void normalize_classes(std::vector<std::vector<std::size_t>>& classes, std::size_t m);

} // namespace norton
