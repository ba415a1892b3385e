// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "norton/binop.hpp"
#include "norton/classify.hpp"
#include "norton/errors.hpp"
#include "norton/norton.hpp"
#include "norton/spectral.hpp"
#include "norton/trees.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace norton;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail << what;
        }
    }
};

struct Built {
    FamilyInstance inst;
    SpectralData spectrum;
    NortonAlgebra algebra;
};

const Built& built(const FamilySpec& f) {
    static std::map<std::string, Built> store;
    const auto id = cache_id(f);
    auto it = store.find(id);
    if (it == store.end()) {
        auto inst = build_family(f);
        auto s = compute_spectrum(inst.graph);
        auto alg = structure_constants(inst, s);
        it = store.emplace(id, Built{std::move(inst), std::move(s), std::move(alg)}).first;
    }
    return it->second;
}

const FamilySpec kJ31 = JohnsonParams{3, 1};
const FamilySpec kJ41 = JohnsonParams{4, 1};
const FamilySpec kJ42 = JohnsonParams{4, 2};
const FamilySpec kJ52 = JohnsonParams{5, 2};
const FamilySpec kG242 = GrassmannParams{2, 4, 2};
const FamilySpec kH22 = HammingParams{2, 2};
const FamilySpec kH23 = HammingParams{2, 3};
const FamilySpec kH13 = HammingParams{1, 3};
const FamilySpec kH14 = HammingParams{1, 4};
const FamilySpec kD22 = DualPolarParams{DualPolarKind::D, 2, 2};
const FamilySpec kC22 = DualPolarParams{DualPolarKind::C, 2, 2};

const std::vector<FamilySpec> kSpectralInstances{kJ31, kJ41, kJ42, kJ52, kG242, kH22, kH23, kH14, kD22, kC22};

void trees_layer(Outcome& out) {
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto trees = enumerate_trees(n);
        out.require(BigInt(static_cast<unsigned long>(trees.size())) == catalan(static_cast<unsigned>(n)),
                    "tree count differs from C_" + std::to_string(n));
        std::set<DepthSequence> image;
        for (const auto& t : trees) image.insert(depth_sequence(t));
        out.require(image == depth_set(n), "depth_set(" + std::to_string(n) + ") differs from the image");
    }
}

void double_minus(Outcome& out) {
    for (std::size_t m = 1; m <= 10; ++m)
        out.require(BigInt(static_cast<unsigned long>(double_minus_classes(m).class_count())) == a000975_value(m),
                    "depth parity count differs at m=" + std::to_string(m));
    const auto op = double_minus_operation();
    for (std::size_t m = 0; m <= 8; ++m) {
        const auto exact = count_classes_exact(op, m);
        const auto parity = double_minus_classes(m);
        out.require(exact.classes == parity.classes, "fingerprint partition differs at m=" + std::to_string(m));
    }
}

void spectra(Outcome& out) {
    for (const auto& f : kSpectralInstances) {
        const auto& s = built(f).spectrum;
        for (int i = 0; i <= s.diameter(); ++i) {
            out.require(s.eigenvalues[static_cast<std::size_t>(i)] == closed_form_eigenvalue(f, i),
                        display_name(f) + " eigenvalue " + std::to_string(i));
            out.require(s.multiplicities[static_cast<std::size_t>(i)] == closed_form_multiplicity(f, i),
                        display_name(f) + " multiplicity " + std::to_string(i));
        }
        out.require(static_cast<int>(s.eigenvalues.size()) == family_diameter(f) + 1, display_name(f) + " diameter");
    }
}

void formulas(Outcome& out) {
    std::size_t pairs = 0;
    for (const auto& f : kSpectralInstances) {
        const auto& b = built(f);
        const auto check = verify_formula_vs_oracle(b.inst, b.spectrum);
        const auto l1 = b.inst.lattice->level(1).size();
        out.require(check.pairs == l1 * l1, display_name(f) + " pair count");
        out.require(check.max_discrepancy == 0 && check.mismatches == 0,
                    display_name(f) + " discrepancy " + to_string(check.max_discrepancy));
        pairs += check.pairs;
    }
    out.detail << pairs << " pairs";
}

void require_counts(Outcome& out, const FamilySpec& f, std::size_t m_from, std::size_t m_to, Strategy strategy,
                    const std::function<BigInt(std::size_t)>& expected) {
    for (std::size_t m = m_from; m <= m_to; ++m) {
        const auto r = count_norton_classes(built(f).algebra, m, strategy);
        out.require(BigInt(static_cast<unsigned long>(r.class_count())) == expected(m),
                    display_name(f) + " m=" + std::to_string(m) + " gives " + std::to_string(r.class_count()));
    }
}

void associative(Outcome& out) {
    for (const auto& f : {kJ42, kH22})
        require_counts(out, f, 0, 6, Strategy::tensor, [](std::size_t) { return BigInt(1); });
}

void a000975_branch(Outcome& out) {
    const long expected[] = {1, 2, 5, 10, 21};
    for (const auto& f : {kJ31, kH13, kH23, kD22})
        require_counts(out, f, 1, 5, Strategy::tensor, [&](std::size_t m) { return BigInt(expected[m - 1]); });
}

void totally_nonassociative(Outcome& out) {
    const auto catalan_m = [](std::size_t m) { return catalan(static_cast<unsigned>(m)); };
    for (const auto& f : {kJ41, kJ52, kH14, kC22}) require_counts(out, f, 1, 4, Strategy::tensor, catalan_m);
    require_counts(out, kG242, 1, 3, Strategy::tensor, catalan_m);

    // One-off patterns alone separate every pair of trees; a budget of 1 rules out fingerprints.
    for (const auto& f : {kJ41, kJ52, kH14, kC22, kG242})
        for (std::size_t m : {4u, 5u}) {
            const auto r = count_norton_classes(built(f).algebra, m, Strategy::pattern, 1);
            const std::size_t n = r.class_count();
            out.require(BigInt(static_cast<unsigned long>(n)) == catalan(static_cast<unsigned>(m)) &&
                            r.merges.empty() && r.certificates.size() == n * (n - 1) / 2,
                        display_name(f) + " pattern certificates at m=" + std::to_string(m));
        }
}

Vector centred_indicator(const FamilyInstance& inst, const LatticeKey& key) {
    const auto& l = *inst.lattice;
    const auto id = *l.find(key);
    const auto& vertices = l.level(l.height());
    Vector v(vertices.size());
    long count = 0;
    for (std::size_t x = 0; x < vertices.size(); ++x)
        if (l.leq(id, vertices[x])) {
            v[x] = 1;
            ++count;
        }
    const Rational mean = Rational(count) / static_cast<long>(vertices.size());
    for (auto& x : v) x -= mean;
    return v;
}

bool same_fingerprints(const BilinearOperation& a, const BilinearOperation& b, std::size_t m_max) {
    for (std::size_t m = 0; m <= m_max; ++m)
        for (const auto& t : enumerate_trees(m))
            if (tensor_fingerprint(a, t) != tensor_fingerprint(b, t)) return false;
    return true;
}

void isomorphisms(Outcome& out) {
    const auto& h13 = built(kH13).algebra.op;
    const auto& h23 = built(kH23);
    out.require(same_fingerprints(h23.algebra.op, direct_product(h13, h13), 4), "H(2,3) is not H(1,3) x H(1,3)");

    // D_2(2) = K_{3,3}: vectors 3 (e_a - 1_P / 3) for two vertices a of each side P,
    // against 3 times the centred indicators of (1,0), (2,0), (0,1), (0,2) in H(2,3).
    const auto& d = built(kD22);
    std::vector<std::size_t> sides[2];
    for (std::size_t x = 0; x < d.inst.graph.size(); ++x) sides[d.inst.graph.distance(0, x) % 2].push_back(x);
    std::vector<Vector> dbasis;
    for (const auto& side : sides)
        for (std::size_t i = 0; i < 2; ++i) {
            Vector v(d.inst.graph.size());
            for (auto x : side) v[x] = -1;
            v[side[i]] = 2;
            dbasis.push_back(v);
        }
    std::vector<Vector> hbasis;
    for (std::size_t pos = 0; pos < 2; ++pos)
        for (int letter = 1; letter <= 2; ++letter) {
            std::vector<int> w{0, 0};
            w[pos] = letter;
            hbasis.push_back(Rational(3) * centred_indicator(h23.inst, Word{w}));
        }
    out.require(same_fingerprints(operation_in_basis(d.spectrum, dbasis), operation_in_basis(h23.spectrum, hbasis), 4),
                "D_2(2) and H(2,3) differ after alignment");
}

void lemmas(Outcome& out) {
    std::size_t evaluations = 0;
    for (const auto& f : {kJ31, kJ41, kJ52, kH13, kH23, kH14, kD22, kC22, kG242}) {
        const auto check = check_one_off_lemma(built(f).algebra, 5, 10);
        out.require(check.ok(), display_name(f) + " " + check.first_failure);
        evaluations += check.evaluations;
    }
    const auto& g = std::get<GrassmannParams>(kG242);
    out.require(check_grassmann_recursion(g, 10), "Grassmann gamma recursion");
    out.require(check_grassmann_recursion(GrassmannParams{3, 4, 2}, 10), "Grassmann gamma recursion for q = 3");
    if (out.ok) out.detail << evaluations << " evaluations";
}

void cli(Outcome& out) {
    const auto dir = std::filesystem::temp_directory_path() / "norton-acceptance-cache";
    std::filesystem::remove_all(dir);
    const std::string cache = " --cache-dir \"" + dir.string() + "\" > /dev/null";
    const std::string cli = std::string("\"") + NORTON_CLI_PATH + "\"";
    const std::vector<std::string> commands{
        cli + " verify johnson 3 1 --m-max 5" + cache,
        cli + " verify hamming 2 3 --m-max 5" + cache,
        cli + " verify dualpolar D 2 2 --m-max 5" + cache,
        cli + " verify johnson 5 2 --m-max 5" + cache,
        cli + " verify johnson 4 2 --m-max 6" + cache,
        cli + " table johnson:3:1 johnson:4:1 johnson:4:2 hamming:2:3 dualpolar:D:2:2 --m-max 4" + cache,
    };
    for (const auto& c : commands) {
        const int status = std::system(c.c_str());
        out.require(status == 0, "non-zero exit from: " + c);
    }
    std::filesystem::remove_all(dir);
    if (out.ok) out.detail << commands.size() << " commands";
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_seconds;
        void (*run)(Outcome&);
    };
    const Criterion criteria[] = {
        {"trees and depth sequences", 10, trees_layer},
        {"double minus", 30, double_minus},
        {"spectra", 60, spectra},
        {"formula vs oracle", 120, formulas},
        {"associative branch", 0, associative},
        {"A000975 branch", 300, a000975_branch},
        {"totally nonassociative branch", 0, totally_nonassociative},
        {"structural isomorphisms", 0, isomorphisms},
        {"coefficient lemmas", 0, lemmas},
        {"headless verify and table", 0, cli},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail << "exception: " << e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
            if (!out.detail.str().empty()) out.detail << "; ";
            out.ok = false;
            out.detail << "over the " << c.limit_seconds << " s limit";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (out.ok ? "PASS" : "FAIL") << " " << index << " " << c.name << " (" << timing << ")";
        const auto detail = out.detail.str();
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << std::endl;
        failures += !out.ok;
    }
    return failures == 0 ? 0 : 1;
}
