#pragma once

#include "norton/binop.hpp"
#include "norton/graphs.hpp"
#include "norton/spectral.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace norton {

// bar: v-bar = scale * v-check with the family factor; check: the unscaled projections.
enum class Normalization { bar, check };
std::string to_string(Normalization n);

// Family rescaling from v-check to the normalization used by the product formulas.
Normalization family_normalization(const FamilySpec& f);
Rational family_scale(const FamilySpec& f);

// E_i (u . v); throws InvalidParameters unless both inputs lie in V_i.
Vector norton_oracle(const SpectralData& s, int i, const Vector& u, const Vector& v);

struct SpanningSet {
    long a1 = 0; // #{x in X : x >= v}, the same for every v in L_1
    Normalization normalization = Normalization::check;
    Rational scale = 1;
    std::vector<RankedLattice::Id> labels; // L_1 in lattice order
    std::vector<Vector> vectors;           // scale * (i_v - a1/|X| 1)
};

SpanningSet spanning_vectors(const FamilyInstance& inst, const SpectralData& s);

// Formal combination of L_1 elements, keyed by position within L_1.
using FormalCombination = std::map<std::size_t, Rational>;

// Right-hand side of the family product formula for the L_1 elements at positions u, v.
FormalCombination formula_product(const FamilyInstance& inst, std::size_t u, std::size_t v);

struct FormulaCheck {
    std::size_t pairs = 0;
    Rational max_discrepancy = 0; // largest |entry| of oracle minus formula
    std::size_t mismatches = 0;
    std::optional<std::pair<std::size_t, std::size_t>> worst_pair;
};

FormulaCheck verify_formula_vs_oracle(const FamilyInstance& inst, const SpectralData& s);

enum class BasisOrder { forward, reverse };

/*
 * Norton algebra on V_1 in coordinates. The basis consists of spanning
 * vectors: for Hamming graphs the words whose nonzero letter is below e,
 * ordered by position then letter; otherwise the greedy independent prefix in
 * lattice order (or in reverse order, for cross-checks).
 *
 * The pattern pair (u, v) drives the one-off evaluations; pattern_u/v hold
 * their coordinates scaled so that pattern_u * pattern_u = pattern_u.
 */
struct NortonAlgebra {
    FamilySpec family;
    Normalization normalization = Normalization::check;
    Rational scale = 1;
    std::vector<std::string> spanning_labels;
    std::vector<std::size_t> basis; // positions in L_1
    RationalMatrix spanning_coordinates; // |L_1| x dim
    BilinearOperation op = BilinearOperation::zero(1);
    std::optional<std::pair<std::size_t, std::size_t>> pattern_pair;
    Rational lemma_scale = 1; // pattern vectors = lemma_scale * spanning vectors
    Vector pattern_u, pattern_v;
    Vector pattern_span; // Grassmann: sum of w-bar over w <= u v v; empty otherwise

    std::size_t dimension() const { return op.dimension(); }
};

NortonAlgebra structure_constants(const FamilyInstance& inst, const SpectralData& s,
                                  BasisOrder order = BasisOrder::forward);

// Structure constants of V_1 in an arbitrary basis of V_1 (vectors over X).
BilinearOperation operation_in_basis(const SpectralData& s, const std::vector<Vector>& basis);

} // namespace norton
