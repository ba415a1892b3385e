#pragma once

#include "norton/binop.hpp"
#include "norton/norton.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace norton {

enum class Branch { associative, a000975, totally_nonassociative };
std::string to_string(Branch b);

// J(2k,k) and H(d,2) are associative; J(3,1), H(d,3) and D_2(2) follow A000975;
// everything else is totally nonassociative.
Branch predicted_branch(const FamilySpec& f);
// 1, floor(2^(m+1)/3) (1 at m = 0), or C_m.
BigInt expected_class_count(Branch b, std::size_t m);

/*
 * Constants of the one-off product rule u*v = c(u+v) [+ b, b' terms] in the
 * normalization where u*u = u. Grassmann graphs also use b; dual polar graphs
 * use b and b' away from the pattern pair.
 */
struct LemmaConstants {
    Rational c;
    Rational b;
    Rational b_prime;
};

// Throws InvalidParameters for the associative instances, which have no such rule.
LemmaConstants lemma_constants(const FamilySpec& f);

struct CoefficientRow {
    std::size_t h = 0;
    Rational alpha;      // c^h
    Rational cumulative; // c + c^2 + ... + c^h
    Rational gamma;      // Grassmann: ((qb + c)^h - c^h) / q; zero elsewhere
};

CoefficientRow pattern_coefficients(const NortonAlgebra& alg, std::size_t h);

// z_r = pattern_u, z_s = pattern_v for s != r, evaluated through t.
Vector one_off_value(const NortonAlgebra& alg, const BinaryTree& t, std::size_t r);

struct LemmaCheck {
    std::size_t evaluations = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

// Compares one_off_value with the closed form for every t in T_m (m <= m_max) and every
// leaf r, and along left combs up to depth h_max.
LemmaCheck check_one_off_lemma(const NortonAlgebra& alg, std::size_t m_max, std::size_t h_max);

// gamma(h+1) = b alpha(h) + c gamma(h) + q b gamma(h), and the binomial sum form of gamma.
bool check_grassmann_recursion(const GrassmannParams& p, std::size_t h_max);

// c != +1, -1 for the totally nonassociative instances.
bool distinguishing_constant_ok(const FamilySpec& f);

enum class Strategy { tensor, pattern, automatic };
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

struct DistinctnessResult {
    enum class Kind { distinct, theorem_equivalent, equivalent_at_tested };
    Kind kind = Kind::equivalent_at_tested;
    std::optional<DistinctnessCertificate> certificate;
};

// Scans positions r in increasing order for a one-off assignment that separates t and t'.
DistinctnessResult certify_distinct(const NortonAlgebra& alg, const BinaryTree& t, const BinaryTree& t2,
                                    std::size_t index_a = 0, std::size_t index_b = 1);

EquivalenceReport count_norton_classes(const NortonAlgebra& alg, std::size_t m, Strategy strategy,
                                       std::size_t budget = kDefaultFingerprintBudget);

struct ClassificationVerdict {
    std::string instance;
    std::size_t m_max = 0;
    Branch predicted = Branch::totally_nonassociative;
    std::vector<std::size_t> observed;
    std::vector<BigInt> expected;
    std::vector<EquivalenceReport> reports;
    std::optional<std::size_t> failing_m;
    bool pass = false;
};

ClassificationVerdict verify_theorem1(const NortonAlgebra& alg, std::size_t m_max, Strategy strategy,
                                      std::size_t budget = kDefaultFingerprintBudget);

nlohmann::json to_json(const ClassificationVerdict& v, bool include_reports = false);

} // namespace norton
