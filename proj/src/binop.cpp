#include "norton/binop.hpp"

#include "norton/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>

namespace norton {

BilinearOperation BilinearOperation::bilinear(std::size_t dim, Vector constants) {
    if (dim == 0) throw std::invalid_argument("operation dimension must be positive");
    if (constants.size() != dim * dim * dim)
        throw std::invalid_argument("structure constants must have dim^3 entries");
    BilinearOperation op;
    op.form_ = Form::bilinear;
    op.dim_ = dim;
    op.constants_ = std::move(constants);
    return op;
}

BilinearOperation BilinearOperation::zero(std::size_t dim) { return bilinear(dim, Vector(dim * dim * dim)); }

BilinearOperation BilinearOperation::linear(RationalMatrix left, RationalMatrix right) {
    const std::size_t dim = left.rows();
    if (dim == 0 || left.cols() != dim || right.rows() != dim || right.cols() != dim)
        throw std::invalid_argument("linear operation needs two square maps of equal size");
    BilinearOperation op;
    op.form_ = Form::linear;
    op.dim_ = dim;
    op.left_ = std::move(left);
    op.right_ = std::move(right);
    return op;
}

Vector BilinearOperation::apply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("operand dimension mismatch");
    if (form_ == Form::linear) return left_.apply(x) + right_.apply(y);
    Vector out(dim_);
    Rational xy;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& c = constant(i, j, k);
                if (c != 0) out[k] += xy * c;
            }
        }
    }
    return out;
}

bool BilinearOperation::is_commutative() const {
    if (form_ == Form::linear) return left_ == right_;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (constant(i, j, k) != constant(j, i, k)) return false;
    return true;
}

BilinearOperation double_minus_operation() {
    RationalMatrix minus_one(1, 1);
    minus_one(0, 0) = -1;
    return BilinearOperation::linear(minus_one, minus_one);
}

BilinearOperation direct_product(const BilinearOperation& a, const BilinearOperation& b) {
    if (a.form() != b.form()) throw std::invalid_argument("direct product of operations of different forms");
    const std::size_t da = a.dimension(), db = b.dimension(), d = da + db;
    if (a.form() == BilinearOperation::Form::linear) {
        RationalMatrix l(d, d), r(d, d);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                l(i, j) = a.left_map()(i, j);
                r(i, j) = a.right_map()(i, j);
            }
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < db; ++j) {
                l(da + i, da + j) = b.left_map()(i, j);
                r(da + i, da + j) = b.right_map()(i, j);
            }
        return BilinearOperation::linear(std::move(l), std::move(r));
    }
    Vector c(d * d * d);
    auto at = [d](std::size_t i, std::size_t j, std::size_t k) { return (i * d + j) * d + k; };
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) c[at(i, j, k)] = a.constant(i, j, k);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k) c[at(da + i, da + j, da + k)] = b.constant(i, j, k);
    return BilinearOperation::bilinear(d, std::move(c));
}

BilinearOperation change_basis(const BilinearOperation& op, const RationalMatrix& new_basis) {
    if (op.form() != BilinearOperation::Form::bilinear)
        throw std::invalid_argument("change_basis needs a bilinear operation");
    const std::size_t d = op.dimension();
    if (new_basis.rows() != d || new_basis.cols() != d) throw std::invalid_argument("basis matrix shape");
    auto inv = inverse(new_basis);
    if (!inv) throw std::invalid_argument("new basis is singular");
    Vector c(d * d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Vector prod = inv->apply(op.apply(new_basis.column(i), new_basis.column(j)));
            for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = prod[k];
        }
    }
    return BilinearOperation::bilinear(d, std::move(c));
}

Vector evaluate_parenthesization(const BilinearOperation& op, const BinaryTree& t,
                                 std::span<const Vector> args) {
    if (args.size() != t.leaf_count())
        throw std::invalid_argument("expected " + std::to_string(t.leaf_count()) + " arguments, got " +
                                    std::to_string(args.size()));
    for (const auto& a : args)
        if (a.size() != op.dimension()) throw std::invalid_argument("argument dimension mismatch");
    auto rec = [&](auto& self, const BinaryTree& node, std::size_t first) -> Vector {
        if (node.is_leaf()) return args[first];
        Vector l = self(self, node.left(), first);
        Vector r = self(self, node.right(), first + node.left().leaf_count());
        return op.apply(l, r);
    };
    return rec(rec, t, 0);
}

std::size_t fingerprint_size(const BilinearOperation& op, std::size_t m) {
    const std::size_t d = op.dimension();
    if (op.form() == BilinearOperation::Form::linear) return (m + 1) * d * d;
    std::size_t size = d;
    for (std::size_t i = 0; i <= m; ++i) {
        if (size > (std::size_t(1) << 62) / d) return std::size_t(-1);
        size *= d;
    }
    return size;
}

namespace {

// Subtree tensors keyed by shape; a subtree's map does not depend on where it sits.
class TensorEvaluator {
public:
    explicit TensorEvaluator(const BilinearOperation& op) : op_(op) {}

    std::shared_ptr<const Vector> tensor(const BinaryTree& t) {
        std::string key = t.to_string();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        auto result = t.is_leaf() ? identity() : combine(*tensor(t.left()), *tensor(t.right()));
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    std::shared_ptr<const Vector> identity() const {
        const std::size_t d = op_.dimension();
        auto id = std::make_shared<Vector>(d * d);
        for (std::size_t i = 0; i < d; ++i) (*id)[i * d + i] = 1;
        return id;
    }

    // out[I, J][k] = sum_a L[I][a] * M_J[a][k],  M_J[a][k] = sum_b R[J][b] C[a][b][k]
    std::shared_ptr<const Vector> combine(const Vector& left, const Vector& right) const {
        const std::size_t d = op_.dimension();
        const std::size_t nl = left.size() / d, nr = right.size() / d;
        auto out = std::make_shared<Vector>(nl * nr * d);
        Vector mj(d * d);
        Rational tmp;
        for (std::size_t j = 0; j < nr; ++j) {
            std::fill(mj.begin(), mj.end(), Rational(0));
            bool any = false;
            for (std::size_t b = 0; b < d; ++b) {
                const Rational& rb = right[j * d + b];
                if (rb == 0) continue;
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t k = 0; k < d; ++k) {
                        const Rational& c = op_.constant(a, b, k);
                        if (c == 0) continue;
                        tmp = rb * c;
                        mj[a * d + k] += tmp;
                        any = true;
                    }
            }
            if (!any) continue;
            for (std::size_t i = 0; i < nl; ++i) {
                Rational* dst = &(*out)[(i * nr + j) * d];
                for (std::size_t a = 0; a < d; ++a) {
                    const Rational& la = left[i * d + a];
                    if (la == 0) continue;
                    for (std::size_t k = 0; k < d; ++k) {
                        if (mj[a * d + k] == 0) continue;
                        tmp = la * mj[a * d + k];
                        dst[k] += tmp;
                    }
                }
            }
        }
        return out;
    }

    const BilinearOperation& op_;
    std::unordered_map<std::string, std::shared_ptr<const Vector>> memo_;
};

Vector linear_fingerprint(const BilinearOperation& op, const BinaryTree& t) {
    Vector out;
    auto walk = [&](auto& self, const BinaryTree& node, const RationalMatrix& acc) -> void {
        if (node.is_leaf()) {
            out.insert(out.end(), acc.data().begin(), acc.data().end());
            return;
        }
        self(self, node.left(), acc * op.left_map());
        self(self, node.right(), acc * op.right_map());
    };
    walk(walk, t, RationalMatrix::identity(op.dimension()));
    return out;
}

void check_budget(const BilinearOperation& op, std::size_t m, std::size_t budget) {
    const std::size_t size = fingerprint_size(op, m);
    if (size > budget)
        throw BudgetExceeded("fingerprint of dimension " + std::to_string(op.dimension()) + " at m=" +
                             std::to_string(m) + " needs " +
                             (size == std::size_t(-1) ? std::string("overflowing") : std::to_string(size)) +
                             " entries (budget " + std::to_string(budget) + ")");
}

} // namespace

Vector tensor_fingerprint(const BilinearOperation& op, const BinaryTree& t, std::size_t budget) {
    check_budget(op, t.internal_count(), budget);
    if (op.form() == BilinearOperation::Form::linear) return linear_fingerprint(op, t);
    TensorEvaluator eval(op);
    return *eval.tensor(t);
}

std::string to_string(EquivalenceMethod m) {
    switch (m) {
    case EquivalenceMethod::tensor_exact: return "tensor_exact";
    case EquivalenceMethod::depth_mod2: return "depth_mod2";
    case EquivalenceMethod::pattern_certified: return "pattern_certified";
    }
    return "unknown";
}

std::string to_string(MergeBacking b) {
    return b == MergeBacking::fingerprint_verified ? "fingerprint_verified" : "theorem_backed";
}

nlohmann::json to_json(const EquivalenceReport& r) {
    nlohmann::json j;
    j["m"] = r.m;
    j["method"] = to_string(r.method);
    j["class_count"] = r.class_count();
    j["classes"] = r.classes;
    if (!r.merges.empty()) {
        auto& merges = j["merges"] = nlohmann::json::array();
        for (const auto& m : r.merges)
            merges.push_back({{"representative", m.representative}, {"member", m.member},
                              {"backing", to_string(m.backing)}});
    }
    if (!r.certificates.empty()) {
        auto& certs = j["certificates"] = nlohmann::json::array();
        for (const auto& c : r.certificates) {
            nlohmann::json va = nlohmann::json::array(), vb = nlohmann::json::array();
            for (const auto& x : c.value_a) va.push_back(to_string(x));
            for (const auto& x : c.value_b) vb.push_back(to_string(x));
            certs.push_back({{"trees", {c.tree_a, c.tree_b}}, {"position", c.position},
                             {"pattern", c.pattern}, {"value_a", va}, {"value_b", vb}});
        }
    }
    return j;
}

void normalize_classes(std::vector<std::vector<std::size_t>>& classes, std::size_t m) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
    if (classes.empty() || BigInt(static_cast<unsigned long>(classes.size())) > catalan(static_cast<unsigned>(m)))
        throw VerificationFailure("class count " + std::to_string(classes.size()) + " outside [1, C_" +
                                  std::to_string(m) + "]");
}

std::vector<std::vector<std::size_t>> group_by_fingerprint(const BilinearOperation& op,
                                                           std::span<const BinaryTree> trees,
                                                           std::size_t budget) {
    std::vector<std::vector<std::size_t>> classes;
    if (trees.empty()) return classes;
    const std::size_t m = trees.front().internal_count();
    check_budget(op, m, budget);
    std::map<Vector, std::size_t> seen;
    TensorEvaluator eval(op);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (trees[i].internal_count() != m) throw std::invalid_argument("trees of different sizes");
        Vector fp = op.form() == BilinearOperation::Form::linear ? linear_fingerprint(op, trees[i])
                                                                  : *eval.tensor(trees[i]);
        auto [it, inserted] = seen.emplace(std::move(fp), classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(i);
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

EquivalenceReport count_classes_exact(const BilinearOperation& op, std::size_t m, std::size_t budget) {
    check_budget(op, m, budget);
    auto trees = enumerate_trees(m);
    EquivalenceReport report;
    report.m = m;
    report.method = EquivalenceMethod::tensor_exact;
    report.classes = group_by_fingerprint(op, trees, budget);
    normalize_classes(report.classes, m);
    return report;
}

EquivalenceReport double_minus_classes(std::size_t m, std::size_t limit) {
    auto trees = enumerate_trees(m, limit);
    std::map<DepthSequence, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < trees.size(); ++i) groups[depth_sequence(trees[i]).mod2()].push_back(i);
    EquivalenceReport report;
    report.m = m;
    report.method = EquivalenceMethod::depth_mod2;
    for (auto& [key, members] : groups) report.classes.push_back(std::move(members));
    normalize_classes(report.classes, m);
    return report;
}

BigInt a000975_value(std::size_t m) {
    if (m == 0) throw std::invalid_argument("a000975_value is defined for m >= 1 only");
    BigInt p = 1;
    p <<= static_cast<mp_bitcnt_t>(m + 1);
    return p / 3;
}

} // namespace norton
