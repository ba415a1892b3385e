#include "norton/classify.hpp"

#include "norton/errors.hpp"

#include <map>

namespace norton {

std::string to_string(Branch b) {
    switch (b) {
    case Branch::associative: return "associative";
    case Branch::a000975: return "a000975";
    case Branch::totally_nonassociative: return "totally_nonassociative";
    }
    return "unknown";
}

Branch predicted_branch(const FamilySpec& f) {
    if (auto* j = std::get_if<JohnsonParams>(&f)) {
        if (j->n == 2 * j->k) return Branch::associative;
        if (j->n == 3 && j->k == 1) return Branch::a000975;
        return Branch::totally_nonassociative;
    }
    if (auto* h = std::get_if<HammingParams>(&f)) {
        if (h->e == 2) return Branch::associative;
        if (h->e == 3) return Branch::a000975;
        return Branch::totally_nonassociative;
    }
    if (auto* p = std::get_if<DualPolarParams>(&f))
        if (p->kind == DualPolarKind::D && p->d == 2 && p->q == 2) return Branch::a000975;
    if (std::holds_alternative<CustomGraph>(f)) throw InvalidParameters("no prediction for custom graphs");
    return Branch::totally_nonassociative;
}

BigInt expected_class_count(Branch b, std::size_t m) {
    switch (b) {
    case Branch::associative: return 1;
    case Branch::a000975: return m == 0 ? BigInt(1) : a000975_value(m);
    case Branch::totally_nonassociative: return catalan(static_cast<unsigned>(m));
    }
    return 0;
}

LemmaConstants lemma_constants(const FamilySpec& f) {
    if (predicted_branch(f) == Branch::associative)
        throw InvalidParameters(display_name(f) + " has a zero product; no one-off rule applies");
    LemmaConstants k;
    if (auto* j = std::get_if<JohnsonParams>(&f)) {
        k.c = Rational(-1, j->n - 2);
    } else if (auto* g = std::get_if<GrassmannParams>(&f)) {
        const Rational n = q_int(g->n, g->q), kk = q_int(g->k, g->q);
        k.c = -kk / (n - 2 * kk);
        k.b = Rational(q_int(g->k - 1, g->q)) * n / (Rational(g->q * q_int(g->n - 2, g->q)) * (n - 2 * kk));
    } else if (auto* h = std::get_if<HammingParams>(&f)) {
        k.c = Rational(-1, h->e - 2);
    } else {
        const auto& p = std::get<DualPolarParams>(f);
        const Rational q = p.q, big_q = rational_pow(q, p.d + p.e() - 1);
        k.c = 1 / (1 - big_q);
        k.b = (big_q + 1) / ((big_q - 1) * rational_pow(q, p.d - 1) * (1 + rational_pow(q, p.e() - 1)));
        k.b_prime = k.b / (1 + rational_pow(q, p.d - 3 + p.e()));
    }
    return k;
}

namespace {

Rational grassmann_gamma(const Rational& b, const Rational& c, int q, std::size_t h) {
    const long e = static_cast<long>(h);
    return (rational_pow(q * b + c, e) - rational_pow(c, e)) / q;
}

} // namespace

CoefficientRow pattern_coefficients(const NortonAlgebra& alg, std::size_t h) {
    if (h == 0) throw InvalidParameters("pattern_coefficients needs h >= 1");
    const LemmaConstants k = lemma_constants(alg.family);
    CoefficientRow row;
    row.h = h;
    row.alpha = rational_pow(k.c, static_cast<long>(h));
    Rational power = 1;
    for (std::size_t j = 1; j <= h; ++j) {
        power *= k.c;
        row.cumulative += power;
    }
    if (auto* g = std::get_if<GrassmannParams>(&alg.family)) row.gamma = grassmann_gamma(k.b, k.c, g->q, h);
    return row;
}

Vector one_off_value(const NortonAlgebra& alg, const BinaryTree& t, std::size_t r) {
    if (!alg.pattern_pair) throw InvalidParameters("algebra has no pattern pair");
    if (r >= t.leaf_count()) throw InvalidParameters("pattern position outside the tree");
    std::vector<Vector> args(t.leaf_count(), alg.pattern_v);
    args[r] = alg.pattern_u;
    return evaluate_parenthesization(alg.op, t, args);
}

namespace {

// Empty string when the direct value matches the closed form at depth h.
std::string lemma_mismatch(const NortonAlgebra& alg, const Vector& value, std::size_t h) {
    const CoefficientRow row = pattern_coefficients(alg, h);
    if (!std::holds_alternative<GrassmannParams>(alg.family)) {
        Vector expected = row.alpha * alg.pattern_u + row.cumulative * alg.pattern_v;
        return value == expected ? "" : "one-off value differs from c^h u + (c + ... + c^h) v";
    }
    auto coeffs = solve(RationalMatrix::from_columns({alg.pattern_u, alg.pattern_v, alg.pattern_span}), value);
    if (!coeffs) return "one-off value leaves the span of u, v and the join sum";
    if ((*coeffs)[0] != row.alpha) return "alpha(" + std::to_string(h) + ") = " + to_string((*coeffs)[0]);
    if ((*coeffs)[2] != row.gamma) return "gamma(" + std::to_string(h) + ") = " + to_string((*coeffs)[2]);
    return "";
}

} // namespace

LemmaCheck check_one_off_lemma(const NortonAlgebra& alg, std::size_t m_max, std::size_t h_max) {
    lemma_constants(alg.family); // rejects the associative instances
    LemmaCheck check;
    auto record = [&](const std::string& problem, const std::string& where) {
        ++check.evaluations;
        if (problem.empty()) return;
        if (check.failures++ == 0) check.first_failure = where + ": " + problem;
    };
    for (std::size_t m = 1; m <= m_max; ++m)
        for (const auto& t : enumerate_trees(m)) {
            const DepthSequence d = depth_sequence(t);
            for (std::size_t r = 0; r <= m; ++r)
                record(lemma_mismatch(alg, one_off_value(alg, t, r), static_cast<std::size_t>(d[r])),
                       t.to_string() + " r=" + std::to_string(r));
        }
    for (std::size_t h = 1; h <= h_max; ++h)
        record(lemma_mismatch(alg, one_off_value(alg, left_comb(h + 1), 0), h), "left comb depth " + std::to_string(h));
    return check;
}

bool check_grassmann_recursion(const GrassmannParams& p, std::size_t h_max) {
    const LemmaConstants k = lemma_constants(p);
    for (std::size_t h = 1; h <= h_max; ++h) {
        const Rational alpha = rational_pow(k.c, static_cast<long>(h));
        const Rational gamma = grassmann_gamma(k.b, k.c, p.q, h);
        const Rational next = grassmann_gamma(k.b, k.c, p.q, h + 1);
        if (k.b * alpha + k.c * gamma + p.q * k.b * gamma != next) return false;
        // sum_{j=1}^h q^(j-1) binom(h,j) b^j c^(h-j)
        Rational sum = 0;
        for (std::size_t j = 1; j <= h; ++j) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), h, j);
            sum += rational_pow(p.q, static_cast<long>(j) - 1) * Rational(binom) *
                   rational_pow(k.b, static_cast<long>(j)) * rational_pow(k.c, static_cast<long>(h - j));
        }
        if (sum != gamma) return false;
    }
    return true;
}

bool distinguishing_constant_ok(const FamilySpec& f) {
    if (predicted_branch(f) != Branch::totally_nonassociative) return false;
    const Rational c = lemma_constants(f).c;
    return c != 1 && c != -1 && c != 0;
}

std::string to_string(Strategy s) {
    switch (s) {
    case Strategy::tensor: return "tensor";
    case Strategy::pattern: return "pattern";
    case Strategy::automatic: return "auto";
    }
    return "unknown";
}

Strategy parse_strategy(const std::string& s) {
    if (s == "tensor") return Strategy::tensor;
    if (s == "pattern") return Strategy::pattern;
    if (s == "auto") return Strategy::automatic;
    throw InvalidParameters("unknown strategy '" + s + "' (tensor, pattern, auto)");
}

namespace {

using Signature = std::vector<Vector>; // one-off values for r = 0..m

Signature signature(const NortonAlgebra& alg, const BinaryTree& t) {
    Signature sig;
    if (!alg.pattern_pair) return sig;
    for (std::size_t r = 0; r < t.leaf_count(); ++r) sig.push_back(one_off_value(alg, t, r));
    return sig;
}

std::optional<DistinctnessCertificate> first_difference(const Signature& a, const Signature& b, std::size_t ia,
                                                        std::size_t ib) {
    for (std::size_t r = 0; r < a.size(); ++r)
        if (a[r] != b[r]) return DistinctnessCertificate{ia, ib, r, 0, a[r], b[r]};
    return std::nullopt;
}

} // namespace

DistinctnessResult certify_distinct(const NortonAlgebra& alg, const BinaryTree& t, const BinaryTree& t2,
                                    std::size_t index_a, std::size_t index_b) {
    if (t.leaf_count() != t2.leaf_count()) throw InvalidParameters("trees of different sizes");
    DistinctnessResult result;
    if (auto cert = first_difference(signature(alg, t), signature(alg, t2), index_a, index_b)) {
        result.kind = DistinctnessResult::Kind::distinct;
        result.certificate = std::move(cert);
        return result;
    }
    if (predicted_branch(alg.family) == Branch::a000975 &&
        depth_sequence(t).mod2() == depth_sequence(t2).mod2())
        result.kind = DistinctnessResult::Kind::theorem_equivalent;
    return result;
}

EquivalenceReport count_norton_classes(const NortonAlgebra& alg, std::size_t m, Strategy strategy,
                                       std::size_t budget) {
    const bool affordable = fingerprint_size(alg.op, m) <= budget;
    if (strategy == Strategy::automatic) strategy = affordable ? Strategy::tensor : Strategy::pattern;
    if (strategy == Strategy::tensor) return count_classes_exact(alg.op, m, budget);

    const auto trees = enumerate_trees(m);
    const Branch branch = predicted_branch(alg.family);
    std::vector<Signature> sigs;
    std::map<Signature, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        sigs.push_back(signature(alg, trees[i]));
        groups[sigs.back()].push_back(i);
    }

    EquivalenceReport report;
    report.m = m;
    report.method = EquivalenceMethod::pattern_certified;
    for (auto& [sig, members] : groups) {
        if (members.size() == 1) {
            report.classes.push_back(members);
            continue;
        }
        if (affordable) {
            std::vector<BinaryTree> subset;
            for (auto i : members) subset.push_back(trees[i]);
            for (auto& cls : group_by_fingerprint(alg.op, subset, budget)) {
                std::vector<std::size_t> mapped;
                for (auto i : cls) mapped.push_back(members[i]);
                for (std::size_t j = 1; j < mapped.size(); ++j)
                    report.merges.push_back({mapped[0], mapped[j], MergeBacking::fingerprint_verified});
                report.classes.push_back(std::move(mapped));
            }
            continue;
        }
        bool backed = branch == Branch::associative;
        if (branch == Branch::a000975) {
            const DepthSequence first = depth_sequence(trees[members[0]]).mod2();
            backed = true;
            for (auto i : members) backed = backed && depth_sequence(trees[i]).mod2() == first;
        }
        if (!backed)
            throw BudgetExceeded("trees " + std::to_string(members[0]) + " and " + std::to_string(members[1]) +
                                 " agree on every one-off pattern and their fingerprints exceed the budget");
        for (std::size_t j = 1; j < members.size(); ++j)
            report.merges.push_back({members[0], members[j], MergeBacking::theorem_backed});
        report.classes.push_back(members);
    }
    normalize_classes(report.classes, m);

    for (std::size_t a = 0; a < report.classes.size(); ++a)
        for (std::size_t b = a + 1; b < report.classes.size(); ++b) {
            const std::size_t ia = report.classes[a][0], ib = report.classes[b][0];
            if (auto cert = first_difference(sigs[ia], sigs[ib], ia, ib))
                report.certificates.push_back(std::move(*cert));
        }
    return report;
}

ClassificationVerdict verify_theorem1(const NortonAlgebra& alg, std::size_t m_max, Strategy strategy,
                                      std::size_t budget) {
    ClassificationVerdict v;
    v.instance = display_name(alg.family);
    v.m_max = m_max;
    v.predicted = predicted_branch(alg.family);
    v.pass = true;
    for (std::size_t m = 0; m <= m_max; ++m) {
        v.reports.push_back(count_norton_classes(alg, m, strategy, budget));
        v.observed.push_back(v.reports.back().class_count());
        v.expected.push_back(expected_class_count(v.predicted, m));
        if (BigInt(static_cast<unsigned long>(v.observed.back())) != v.expected.back() && v.pass) {
            v.pass = false;
            v.failing_m = m;
        }
    }
    return v;
}

nlohmann::json to_json(const ClassificationVerdict& v, bool include_reports) {
    nlohmann::json j;
    j["instance"] = v.instance;
    j["m_max"] = v.m_max;
    j["predicted"] = to_string(v.predicted);
    j["observed"] = v.observed;
    auto& expected = j["expected"] = nlohmann::json::array();
    for (const auto& e : v.expected) expected.push_back(e.get_str());
    j["pass"] = v.pass;
    if (v.failing_m) j["failing_m"] = *v.failing_m;
    auto& methods = j["methods"] = nlohmann::json::array();
    for (const auto& r : v.reports) methods.push_back(to_string(r.method));
    if (include_reports) {
        auto& reports = j["reports"] = nlohmann::json::array();
        for (const auto& r : v.reports) reports.push_back(to_json(r));
    }
    return j;
}

} // namespace norton
