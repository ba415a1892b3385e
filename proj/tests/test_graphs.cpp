#include "norton/errors.hpp"
#include "norton/graphs.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace norton;

namespace {

int degree(const GraphInstance& g, std::size_t x) {
    int d = 0;
    for (std::size_t y = 0; y < g.size(); ++y) d += g.distance(x, y) == 1;
    return d;
}

std::size_t common_vectors(const Subspace& a, const Subspace& b, const PrimeField& f) {
    std::size_t n = 0;
    for (const auto& v : all_vectors(a.ambient, f)) n += contains_vector(a, v, f) && contains_vector(b, v, f);
    return n;
}

int log_q(std::size_t count, int q) {
    int d = 0;
    for (; count > 1; count /= static_cast<std::size_t>(q)) ++d;
    return d;
}

void check_lattice_laws(const RankedLattice& l, std::mt19937& rng) {
    using Id = RankedLattice::Id;
    const Id n = l.size();
    CHECK(l.rank(l.bottom()) == 0);
    CHECK(l.rank(l.top()) == l.height() + 1);
    auto check_triple = [&](Id a, Id b, Id c) {
        CHECK(l.meet(a, b) == l.meet(b, a));
        CHECK(l.join(a, b) == l.join(b, a));
        CHECK(l.meet(l.meet(a, b), c) == l.meet(a, l.meet(b, c)));
        CHECK(l.join(l.join(a, b), c) == l.join(a, l.join(b, c)));
    };
    for (Id a = 0; a < n; ++a) {
        CHECK(l.meet(a, a) == a);
        CHECK(l.join(a, a) == a);
        CHECK(l.leq(l.bottom(), a));
        CHECK(l.leq(a, l.top()));
        for (Id b = 0; b < n; ++b) {
            CHECK(l.meet(a, l.join(a, b)) == a);
            CHECK(l.join(a, l.meet(a, b)) == a);
            CHECK(l.leq(a, b) == (l.meet(a, b) == a));
            CHECK(l.leq(a, b) == (l.join(a, b) == b));
        }
    }
    if (n <= 60) {
        for (Id a = 0; a < n; ++a)
            for (Id b = 0; b < n; ++b)
                for (Id c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::uniform_int_distribution<Id> pick(0, n - 1);
        for (int i = 0; i < 5000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
    }
}

void check_distance_matrix(const GraphInstance& g) {
    for (std::size_t x = 0; x < g.size(); ++x) {
        CHECK(g.distance(x, x) == 0);
        for (std::size_t y = 0; y < g.size(); ++y) {
            CHECK(g.distance(x, y) == g.distance(y, x));
            CHECK(g.distance(x, y) <= g.diameter);
        }
    }
}

} // namespace

TEST_CASE("q-analogues") {
    CHECK(q_int(4, 2) == 15);
    CHECK(q_int(0, 3) == 0);
    CHECK(q_binomial(4, 2, 2) == 35);
    CHECK(q_binomial(4, 2, 3) == 130);
    CHECK(q_binomial(7, 0, 5) == 1);
    CHECK(q_binomial(3, 4, 2) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK_THROWS_AS(checked_pow(10, 40), std::overflow_error);
}

TEST_CASE("Johnson graphs") {
    auto j31 = build_johnson(3, 1);
    CHECK(j31.graph.size() == 3);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) CHECK(j31.graph.distance(x, y) == (x == y ? 0 : 1));

    auto j42 = build_johnson(4, 2);
    CHECK(j42.graph.size() == 6);
    CHECK(j42.graph.diameter == 2);

    auto j52 = build_johnson(5, 2);
    CHECK(j52.graph.size() == 10);
    for (std::size_t x = 0; x < 10; ++x) CHECK(degree(j52.graph, x) == 6);
    for (std::size_t x = 0; x < 10; ++x)
        for (std::size_t y = 0; y < 10; ++y) {
            const auto& a = std::get<Subset>(j52.graph.vertices[x]).items;
            const auto& b = std::get<Subset>(j52.graph.vertices[y]).items;
            int common = 0;
            for (int i : a) common += std::count(b.begin(), b.end(), i) > 0;
            CHECK(j52.graph.distance(x, y) == 2 - common);
        }
    check_distance_matrix(j52.graph);
}

TEST_CASE("Johnson complement isomorphism") {
    auto j53 = build_johnson(5, 3);
    CHECK(std::get<JohnsonParams>(j53.family()) == JohnsonParams{5, 2});
    auto complement = [](const std::vector<int>& s) {
        std::vector<int> out;
        for (int i = 1; i <= 5; ++i)
            if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
        return out;
    };
    // Distances between 3-subsets computed directly, compared with J(5,2) on complements.
    const auto& g = j53.graph;
    for (std::size_t x = 0; x < g.size(); ++x)
        for (std::size_t y = 0; y < g.size(); ++y) {
            auto a = complement(std::get<Subset>(g.vertices[x]).items);
            auto b = complement(std::get<Subset>(g.vertices[y]).items);
            int common = 0;
            for (int i : a) common += std::count(b.begin(), b.end(), i) > 0;
            CHECK(g.distance(x, y) == 3 - common);
        }
    CHECK(canonical_family(JohnsonParams{5, 3}) == FamilySpec{JohnsonParams{5, 2}});
}

TEST_CASE("Grassmann graphs") {
    auto g = build_grassmann(2, 4, 2);
    CHECK(g.graph.size() == 35);
    CHECK(g.graph.diameter == 2);
    PrimeField f(2);
    for (std::size_t x = 0; x < g.graph.size(); ++x)
        for (std::size_t y = 0; y < g.graph.size(); ++y) {
            const auto& a = std::get<Subspace>(g.graph.vertices[x]);
            const auto& b = std::get<Subspace>(g.graph.vertices[y]);
            CHECK(a.dim() == 2);
            CHECK(g.graph.distance(x, y) == 2 - log_q(common_vectors(a, b, f), 2));
        }
    CHECK(build_grassmann(3, 4, 2).graph.size() == 130);
    CHECK_THROWS_AS(build_grassmann(4, 4, 2), InvalidParameters);
    CHECK_THROWS_AS(build_grassmann(2, 4, 1), InvalidParameters);
}

TEST_CASE("Hamming graphs") {
    auto h22 = build_hamming(2, 2);
    CHECK(h22.graph.size() == 4);
    for (std::size_t x = 0; x < 4; ++x) CHECK(degree(h22.graph, x) == 2);

    auto h23 = build_hamming(2, 3);
    CHECK(h23.graph.size() == 9);
    for (std::size_t x = 0; x < 9; ++x) CHECK(degree(h23.graph, x) == 4);
    for (std::size_t x = 0; x < 9; ++x)
        for (std::size_t y = 0; y < 9; ++y) {
            const auto& a = std::get<Word>(h23.graph.vertices[x]).letters;
            const auto& b = std::get<Word>(h23.graph.vertices[y]).letters;
            CHECK(h23.graph.distance(x, y) == (a[0] != b[0]) + (a[1] != b[1]));
            CHECK(std::all_of(a.begin(), a.end(), [](int l) { return l >= 1 && l <= 3; }));
        }

    const auto& l = *h23.lattice;
    auto u = *l.find(Word{{1, 0}}), v = *l.find(Word{{2, 0}}), w = *l.find(Word{{0, 2}});
    CHECK(l.join(u, v) == l.top());
    CHECK(l.key(l.join(u, w)) == LatticeKey{Word{{1, 2}}});
    CHECK(l.meet(u, v) == l.bottom());
    CHECK(l.leq(u, *l.find(Word{{1, 3}})));
    CHECK_FALSE(l.leq(u, *l.find(Word{{2, 3}})));
    CHECK_THROWS_AS(build_hamming(2, 1), InvalidParameters);
}

TEST_CASE("dual polar graphs") {
    auto d22 = build_dual_polar(DualPolarKind::D, 2, 2);
    CHECK(d22.graph.size() == 6);
    // K_{3,3}: two classes of three at mutual distance 2, distance 1 across.
    std::vector<std::size_t> side(6);
    for (std::size_t y = 0; y < 6; ++y) side[y] = d22.graph.distance(0, y) == 1;
    CHECK(std::count(side.begin(), side.end(), 1u) == 3);
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = 0; y < 6; ++y)
            if (x != y) CHECK(d22.graph.distance(x, y) == (side[x] == side[y] ? 2 : 1));
    CHECK(d22.lattice->level(1).size() == 9);
    CHECK(dual_polar_level_size({DualPolarKind::D, 2, 2}, 1) == 9);

    CHECK(build_dual_polar(DualPolarKind::C, 2, 2).graph.size() == 15);
    CHECK(build_dual_polar(DualPolarKind::B, 2, 2).graph.size() == 15);
    CHECK(build_dual_polar(DualPolarKind::Dplus, 2, 2).graph.size() == 45);
    CHECK(build_dual_polar(DualPolarKind::C, 2, 3).graph.size() == 40);
    CHECK_THROWS_AS(build_dual_polar(DualPolarKind::C, 1, 2), InvalidParameters);
    CHECK_THROWS_AS(build_dual_polar(DualPolarKind::C, 2, 4), InvalidParameters);
}

TEST_CASE("dual polar vertices are maximal and the distance law holds") {
    for (auto kind : {DualPolarKind::C, DualPolarKind::B, DualPolarKind::D, DualPolarKind::Dplus}) {
        auto inst = build_dual_polar(kind, 2, 2);
        FormedSpace space(kind, 2, 2);
        PrimeField f(2);
        const auto& g = inst.graph;
        for (std::size_t x = 0; x < g.size(); ++x) {
            const auto& a = std::get<Subspace>(g.vertices[x]);
            CHECK(a.dim() == 2);
            CHECK(space.is_totally_singular(a));
            for (std::size_t y = 0; y < g.size(); ++y) {
                const auto& b = std::get<Subspace>(g.vertices[y]);
                CHECK(g.distance(x, y) == 2 - log_q(common_vectors(a, b, f), 2));
            }
        }
        // no isotropic subspace of dimension 3
        for (auto id : inst.lattice->level(1))
            for (auto v : inst.lattice->level(2)) {
                auto j = inst.lattice->join(id, v);
                CHECK((j == v || j == inst.lattice->top()));
            }
    }
}

TEST_CASE("characteristic 2 quadratic forms") {
    FormedSpace d(DualPolarKind::D, 2, 2);
    // x0 x2 + x1 x3: (1,0,1,0) is not singular although its polar form with itself vanishes
    CHECK_FALSE(d.is_singular({1, 0, 1, 0}));
    CHECK(d.polar({1, 0, 1, 0}, {1, 0, 1, 0}) == 0);
    CHECK(d.is_singular({1, 1, 0, 0}));
    FormedSpace plus(DualPolarKind::Dplus, 2, 2);
    CHECK_FALSE(plus.is_singular({0, 0, 0, 0, 1, 0}));
    CHECK_FALSE(plus.is_singular({0, 0, 0, 0, 0, 1}));
    CHECK_FALSE(plus.is_singular({0, 0, 0, 0, 1, 1}));
}

TEST_CASE("distance regularity") {
    auto j42 = build_johnson(4, 2);
    auto arr = check_distance_regular(j42.graph);
    CHECK(arr.p(1, 1, 1) == 2);
    CHECK(arr.p(1, 1, 0) == 4);
    auto h22 = check_distance_regular(build_hamming(2, 2).graph);
    CHECK(h22.p(1, 1, 2) == 2);

    auto path = graph_from_edges("P4", 4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(path.diameter == 3);
    try {
        check_distance_regular(path);
        FAIL("path graph accepted");
    } catch (const NotDistanceRegular& e) {
        // the witnessing pairs sit at the same distance but see different counts
        CHECK(path.distance(e.first_x, e.first_y) == path.distance(e.second_x, e.second_y));
    }
}

TEST_CASE("built families are distance regular with the expected diameter") {
    const std::vector<FamilySpec> specs{
        JohnsonParams{3, 1}, JohnsonParams{4, 2}, JohnsonParams{5, 2}, JohnsonParams{6, 3},
        GrassmannParams{2, 4, 2}, HammingParams{1, 4}, HammingParams{2, 3}, HammingParams{3, 2},
        DualPolarParams{DualPolarKind::C, 2, 2}, DualPolarParams{DualPolarKind::D, 2, 2},
        DualPolarParams{DualPolarKind::B, 2, 2}, DualPolarParams{DualPolarKind::Dplus, 2, 2},
        DualPolarParams{DualPolarKind::D, 3, 2}};
    for (const auto& s : specs) {
        auto inst = build_family(s);
        CAPTURE(display_name(s));
        CHECK(inst.graph.diameter == family_diameter(s));
        CHECK(static_cast<long>(inst.graph.size()) == expected_vertex_count(s));
        CHECK_NOTHROW(check_distance_regular(inst.graph));
        check_distance_matrix(inst.graph);
    }
}

TEST_CASE("lattice laws") {
    std::mt19937 rng(17);
    for (const auto& s : std::vector<FamilySpec>{JohnsonParams{4, 2}, JohnsonParams{5, 2}, HammingParams{2, 3},
                                                 DualPolarParams{DualPolarKind::D, 2, 2},
                                                 DualPolarParams{DualPolarKind::C, 2, 2}, GrassmannParams{2, 4, 2}}) {
        CAPTURE(display_name(s));
        check_lattice_laws(*build_family(s).lattice, rng);
    }
}

TEST_CASE("vertex budget") {
    CHECK_THROWS_AS(build_hamming(10, 3), BudgetExceeded);
    CHECK_THROWS_AS(build_johnson(30, 10), BudgetExceeded);
    CHECK_NOTHROW(build_hamming(4, 3, 81));
    CHECK_THROWS_AS(build_hamming(4, 3, 80), BudgetExceeded);
}

TEST_CASE("family names and parsing") {
    CHECK(display_name(GrassmannParams{2, 4, 2}) == "J_2(4,2)");
    CHECK(display_name(DualPolarParams{DualPolarKind::D, 2, 2}) == "D_2(2)");
    CHECK(cache_id(JohnsonParams{3, 1}) == "johnson-3-1");
    CHECK(cache_id(DualPolarParams{DualPolarKind::D, 2, 2}) == "dualpolar-D-2-2");
    const std::vector<std::string> spaced{"dualpolar", "Dplus", "2", "3"};
    CHECK(parse_family(spaced) == FamilySpec{DualPolarParams{DualPolarKind::Dplus, 2, 3}});
    const std::vector<std::string> colon{"grassmann:2:4:2"};
    CHECK(parse_family(colon) == FamilySpec{GrassmannParams{2, 4, 2}});
    const std::vector<std::string> bad{"johnson", "3"};
    CHECK_THROWS_AS(parse_family(bad), InvalidParameters);
    const std::vector<std::string> unknown{"petersen"};
    CHECK_THROWS_AS(parse_family(unknown), InvalidParameters);
    const std::vector<std::string> letters{"hamming", "two", "3"};
    CHECK_THROWS_AS(parse_family(letters), InvalidParameters);
}
