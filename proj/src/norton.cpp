#include "norton/norton.hpp"

#include "norton/errors.hpp"

#include <algorithm>
#include <numeric>

namespace norton {

std::string to_string(Normalization n) { return n == Normalization::bar ? "bar" : "check"; }

Normalization family_normalization(const FamilySpec& f) {
    if (auto* j = std::get_if<JohnsonParams>(&f)) return j->n == 2 * j->k ? Normalization::check : Normalization::bar;
    if (std::holds_alternative<GrassmannParams>(f) || std::holds_alternative<DualPolarParams>(f))
        return Normalization::bar;
    return Normalization::check;
}

namespace {

Rational dual_polar_big_q(const DualPolarParams& p) {
    return rational_pow(Rational(p.q), p.d + p.e() - 1);
}

} // namespace

Rational family_scale(const FamilySpec& f) {
    if (family_normalization(f) == Normalization::check) return 1;
    if (auto* j = std::get_if<JohnsonParams>(&f)) return Rational(j->n) / (j->n - 2 * j->k);
    if (auto* g = std::get_if<GrassmannParams>(&f)) {
        const Rational n = q_int(g->n, g->q), k = q_int(g->k, g->q);
        return n / (n - 2 * k);
    }
    const Rational big_q = dual_polar_big_q(std::get<DualPolarParams>(f));
    return (big_q + 1) / (big_q - 1);
}

namespace {

bool in_eigenspace(const SpectralData& s, int i, const Vector& v) { return project(s, i, v) == v; }

// The V_i membership of the inputs is the caller's responsibility.
Vector unchecked_product(const SpectralData& s, int i, const Vector& u, const Vector& v) {
    return project(s, i, hadamard(u, v));
}

Rational max_abs(const Vector& v) {
    Rational best = 0;
    for (const auto& x : v) best = std::max(best, Rational(abs(x)));
    return best;
}

/*
 * Coordinates with respect to a basis of a subspace of Q^X: a set of rows on
 * which the basis is invertible is picked once, and every solution is checked
 * against the full vector.
 */
class Coordinatizer {
public:
    explicit Coordinatizer(const std::vector<Vector>& basis) : basis_(basis) {
        const std::size_t dim = basis.size();
        if (dim == 0) return;
        const std::size_t n = basis.front().size();
        EchelonBasis rows(dim);
        for (std::size_t x = 0; x < n && rows_.size() < dim; ++x) {
            Vector row(dim);
            for (std::size_t j = 0; j < dim; ++j) row[j] = basis[j][x];
            if (rows.try_add(row)) rows_.push_back(x);
        }
        if (rows_.size() != dim) throw VerificationFailure("basis vectors are linearly dependent");
        RationalMatrix square(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t j = 0; j < dim; ++j) square(r, j) = basis[j][rows_[r]];
        inverse_ = *inverse(square);
    }

    Vector coordinates(const Vector& v) const {
        Vector picked(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) picked[r] = v[rows_[r]];
        Vector c = inverse_.apply(picked);
        Vector back(v.size());
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0)
                for (std::size_t x = 0; x < v.size(); ++x) back[x] += c[j] * basis_[j][x];
        if (back != v) throw VerificationFailure("vector is not in the span of the basis");
        return c;
    }

private:
    const std::vector<Vector>& basis_;
    std::vector<std::size_t> rows_;
    RationalMatrix inverse_;
};

BilinearOperation operation_from_coordinatizer(const SpectralData& s, const std::vector<Vector>& basis,
                                               const Coordinatizer& coords) {
    const std::size_t dim = basis.size();
    Vector constants(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            Vector c = coords.coordinates(unchecked_product(s, 1, basis[i], basis[j]));
            for (std::size_t k = 0; k < dim; ++k) {
                constants[(i * dim + j) * dim + k] = c[k];
                constants[(j * dim + i) * dim + k] = c[k];
            }
        }
    return BilinearOperation::bilinear(dim, std::move(constants));
}

} // namespace

Vector norton_oracle(const SpectralData& s, int i, const Vector& u, const Vector& v) {
    if (i < 0 || i > s.diameter()) throw InvalidParameters("eigenspace index out of range");
    if (u.size() != s.vertex_count || v.size() != s.vertex_count)
        throw InvalidParameters("norton_oracle: vector length mismatch");
    if (!in_eigenspace(s, i, u) || !in_eigenspace(s, i, v))
        throw InvalidParameters("norton_oracle: input is not in V_" + std::to_string(i));
    return unchecked_product(s, i, u, v);
}

SpanningSet spanning_vectors(const FamilyInstance& inst, const SpectralData& s) {
    const auto& lattice = *inst.lattice;
    const auto& vertices = lattice.level(lattice.height());
    const std::size_t n = vertices.size();
    SpanningSet out;
    out.normalization = family_normalization(inst.family());
    out.scale = family_scale(inst.family());
    out.labels = lattice.level(1);
    out.a1 = -1;
    for (auto v : out.labels) {
        Vector indicator(n);
        long count = 0;
        for (std::size_t x = 0; x < n; ++x)
            if (lattice.leq(v, vertices[x])) {
                indicator[x] = 1;
                ++count;
            }
        if (out.a1 < 0) out.a1 = count;
        if (count != out.a1)
            throw VerificationFailure("a_1 depends on the choice of " + lattice.label(v));
        const Rational shift = Rational(count) / static_cast<long>(n);
        for (auto& x : indicator) x -= shift;
        if (!in_eigenspace(s, 1, indicator))
            throw VerificationFailure("spanning vector for " + lattice.label(v) + " is not in V_1");
        out.vectors.push_back(out.scale * indicator);
    }
    return out;
}

FormalCombination formula_product(const FamilyInstance& inst, std::size_t u, std::size_t v) {
    const auto& lattice = *inst.lattice;
    const auto& l1 = lattice.level(1);
    if (u >= l1.size() || v >= l1.size()) throw InvalidParameters("formula_product: index outside L_1");
    const auto uid = l1[u], vid = l1[v];
    const auto join = lattice.join(uid, vid);
    FormalCombination out;
    auto add = [&](std::size_t pos, const Rational& c) {
        if (c == 0) return;
        out[pos] += c;
        if (out[pos] == 0) out.erase(pos);
    };

    if (auto* p = std::get_if<JohnsonParams>(&inst.family())) {
        if (p->n == 2 * p->k) return out;
        if (u == v) {
            add(v, 1);
        } else {
            const Rational c = Rational(-1, p->n - 2);
            add(u, c);
            add(v, c);
        }
    } else if (auto* p = std::get_if<GrassmannParams>(&inst.family())) {
        if (u == v) {
            add(v, 1);
        } else {
            const Rational n = q_int(p->n, p->q), k = q_int(p->k, p->q);
            const Rational c = -k / (n - 2 * k);
            const Rational b =
                Rational(q_int(p->k - 1, p->q)) * n / (Rational(p->q * q_int(p->n - 2, p->q)) * (n - 2 * k));
            add(u, c);
            add(v, c);
            for (std::size_t w = 0; w < l1.size(); ++w)
                if (lattice.leq(l1[w], join)) add(w, b);
        }
    } else if (auto* p = std::get_if<HammingParams>(&inst.family())) {
        const Rational e = p->e;
        if (u == v) {
            add(v, (e - 2) / e);
        } else if (join == lattice.top()) {
            add(u, -1 / e);
            add(v, -1 / e);
        }
    } else if (auto* p = std::get_if<DualPolarParams>(&inst.family())) {
        const Rational q = p->q, big_q = dual_polar_big_q(*p);
        const int d = p->d, e = p->e();
        if (u == v) {
            add(v, 1);
        } else {
            const Rational c = 1 / (1 - big_q);
            add(u, c);
            add(v, c);
            if (join != lattice.top()) {
                const Rational b = (big_q + 1) / ((big_q - 1) * rational_pow(q, d - 1) * (1 + rational_pow(q, e - 1)));
                const Rational b2 = b / (1 + rational_pow(q, d - 3 + e));
                for (std::size_t w = 0; w < l1.size(); ++w) {
                    const auto top = lattice.join(join, l1[w]);
                    if (top == lattice.top()) continue;
                    if (lattice.rank(top) == 2) add(w, b);
                    if (lattice.rank(top) == 3) add(w, b2);
                }
            }
        }
    } else {
        throw InvalidParameters("no product formula for " + display_name(inst.family()));
    }
    return out;
}

FormulaCheck verify_formula_vs_oracle(const FamilyInstance& inst, const SpectralData& s) {
    const SpanningSet span = spanning_vectors(inst, s);
    const std::size_t n = span.vectors.size();
    FormulaCheck report;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            Vector diff = unchecked_product(s, 1, span.vectors[u], span.vectors[v]);
            for (const auto& [w, coeff] : formula_product(inst, u, v))
                for (std::size_t x = 0; x < diff.size(); ++x) diff[x] -= coeff * span.vectors[w][x];
            ++report.pairs;
            const Rational gap = max_abs(diff);
            if (gap != 0) ++report.mismatches;
            if (gap > report.max_discrepancy || (!report.worst_pair && gap != 0)) {
                report.max_discrepancy = gap;
                report.worst_pair = std::pair{u, v};
            }
        }
    return report;
}

BilinearOperation operation_in_basis(const SpectralData& s, const std::vector<Vector>& basis) {
    for (const auto& b : basis)
        if (!in_eigenspace(s, 1, b)) throw InvalidParameters("operation_in_basis: vector outside V_1");
    Coordinatizer coords(basis);
    return operation_from_coordinatizer(s, basis, coords);
}

NortonAlgebra structure_constants(const FamilyInstance& inst, const SpectralData& s, BasisOrder order) {
    const auto& lattice = *inst.lattice;
    const SpanningSet span = spanning_vectors(inst, s);
    const std::size_t count = span.vectors.size();

    NortonAlgebra alg;
    alg.family = inst.family();
    alg.normalization = span.normalization;
    alg.scale = span.scale;
    for (auto id : span.labels) alg.spanning_labels.push_back(lattice.label(id));

    if (auto* h = std::get_if<HammingParams>(&inst.family())) {
        // Words with a single nonzero letter below e, by position and then letter.
        std::vector<std::pair<std::pair<std::size_t, int>, std::size_t>> keyed;
        for (std::size_t pos = 0; pos < count; ++pos) {
            const auto& letters = std::get<Word>(lattice.key(span.labels[pos])).letters;
            for (std::size_t i = 0; i < letters.size(); ++i)
                if (letters[i] != 0 && letters[i] < h->e) keyed.push_back({{i, letters[i]}, pos});
        }
        std::sort(keyed.begin(), keyed.end());
        if (order == BasisOrder::reverse) std::reverse(keyed.begin(), keyed.end());
        for (const auto& k : keyed) alg.basis.push_back(k.second);
    } else {
        EchelonBasis echelon(s.vertex_count);
        std::vector<std::size_t> scan(count);
        std::iota(scan.begin(), scan.end(), 0);
        if (order == BasisOrder::reverse) std::reverse(scan.begin(), scan.end());
        for (auto pos : scan)
            if (echelon.try_add(span.vectors[pos])) alg.basis.push_back(pos);
    }

    const long expected = s.multiplicities.size() > 1 ? s.multiplicities[1] : 0;
    if (static_cast<long>(alg.basis.size()) != expected)
        throw VerificationFailure("basis of V_1 has " + std::to_string(alg.basis.size()) + " vectors, expected " +
                                  std::to_string(expected));

    std::vector<Vector> basis;
    for (auto pos : alg.basis) basis.push_back(span.vectors[pos]);
    Coordinatizer coords(basis);
    alg.spanning_coordinates = RationalMatrix(count, basis.size());
    for (std::size_t pos = 0; pos < count; ++pos) {
        Vector c = coords.coordinates(span.vectors[pos]);
        for (std::size_t j = 0; j < c.size(); ++j) alg.spanning_coordinates(pos, j) = c[j];
    }
    alg.op = operation_from_coordinatizer(s, basis, coords);

    // Pattern pair: distinct elements for Johnson and Grassmann; a pair with join 1^ otherwise.
    const auto& l1 = lattice.level(1);
    const bool needs_top_join =
        std::holds_alternative<HammingParams>(inst.family()) || std::holds_alternative<DualPolarParams>(inst.family());
    for (std::size_t u = 0; u < count && !alg.pattern_pair; ++u)
        for (std::size_t v = u + 1; v < count && !alg.pattern_pair; ++v)
            if (!needs_top_join || lattice.join(l1[u], l1[v]) == lattice.top()) alg.pattern_pair = std::pair{u, v};

    if (auto* h = std::get_if<HammingParams>(&inst.family()); h && h->e > 2)
        alg.lemma_scale = Rational(h->e) / (h->e - 2);
    if (alg.pattern_pair) {
        const auto [u, v] = *alg.pattern_pair;
        alg.pattern_u = alg.lemma_scale * alg.spanning_coordinates.row(u);
        alg.pattern_v = alg.lemma_scale * alg.spanning_coordinates.row(v);
        if (std::holds_alternative<GrassmannParams>(inst.family())) {
            const auto join = lattice.join(l1[u], l1[v]);
            alg.pattern_span.assign(basis.size(), 0);
            for (std::size_t w = 0; w < count; ++w)
                if (lattice.leq(l1[w], join)) alg.pattern_span = alg.pattern_span + alg.spanning_coordinates.row(w);
        }
    }
    return alg;
}

} // namespace norton
