#include "norton/graphs.hpp"

#include "norton/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace norton {

// ---------------------------------------------------------------- parameters

int DualPolarParams::e() const {
    switch (kind) {
    case DualPolarKind::C:
    case DualPolarKind::B: return 1;
    case DualPolarKind::D: return 0;
    case DualPolarKind::Dplus: return 2;
    }
    return 0;
}

std::string to_string(DualPolarKind k) {
    switch (k) {
    case DualPolarKind::C: return "C";
    case DualPolarKind::B: return "B";
    case DualPolarKind::D: return "D";
    case DualPolarKind::Dplus: return "Dplus";
    }
    return "?";
}

DualPolarKind parse_dual_polar_kind(const std::string& s) {
    std::string lower;
    for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "c") return DualPolarKind::C;
    if (lower == "b") return DualPolarKind::B;
    if (lower == "d") return DualPolarKind::D;
    if (lower == "dplus" || lower == "d+" || lower == "2d") return DualPolarKind::Dplus;
    throw InvalidParameters("unknown dual polar kind '" + s + "' (expected C, B, D or Dplus)");
}

std::string display_name(const FamilySpec& f) {
    struct Visitor {
        std::string operator()(const JohnsonParams& p) const {
            return "J(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
        }
        std::string operator()(const GrassmannParams& p) const {
            return "J_" + std::to_string(p.q) + "(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
        }
        std::string operator()(const HammingParams& p) const {
            return "H(" + std::to_string(p.d) + "," + std::to_string(p.e) + ")";
        }
        std::string operator()(const DualPolarParams& p) const {
            if (p.kind == DualPolarKind::Dplus)
                return "2D_" + std::to_string(p.d + 1) + "(" + std::to_string(p.q) + ")";
            return to_string(p.kind) + "_" + std::to_string(p.d) + "(" + std::to_string(p.q) + ")";
        }
        std::string operator()(const CustomGraph& p) const { return p.name; }
    };
    return std::visit(Visitor{}, f);
}

std::string cache_id(const FamilySpec& f) {
    struct Visitor {
        std::string operator()(const JohnsonParams& p) const {
            return "johnson-" + std::to_string(p.n) + "-" + std::to_string(p.k);
        }
        std::string operator()(const GrassmannParams& p) const {
            return "grassmann-" + std::to_string(p.q) + "-" + std::to_string(p.n) + "-" + std::to_string(p.k);
        }
        std::string operator()(const HammingParams& p) const {
            return "hamming-" + std::to_string(p.d) + "-" + std::to_string(p.e);
        }
        std::string operator()(const DualPolarParams& p) const {
            return "dualpolar-" + to_string(p.kind) + "-" + std::to_string(p.d) + "-" + std::to_string(p.q);
        }
        std::string operator()(const CustomGraph& p) const { return "custom-" + p.name; }
    };
    return std::visit(Visitor{}, f);
}

int family_diameter(const FamilySpec& f) {
    struct Visitor {
        int operator()(const JohnsonParams& p) const { return p.k; }
        int operator()(const GrassmannParams& p) const { return p.k; }
        int operator()(const HammingParams& p) const { return p.d; }
        int operator()(const DualPolarParams& p) const { return p.d; }
        int operator()(const CustomGraph&) const { return -1; }
    };
    return std::visit(Visitor{}, f);
}

FamilySpec canonical_family(const FamilySpec& f) {
    if (auto* j = std::get_if<JohnsonParams>(&f); j && j->k < j->n && j->n < 2 * j->k)
        return JohnsonParams{j->n, j->n - j->k};
    if (auto* g = std::get_if<GrassmannParams>(&f); g && g->k < g->n && g->n < 2 * g->k)
        return GrassmannParams{g->q, g->n, g->n - g->k};
    return f;
}

namespace {

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw InvalidParameters("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw InvalidParameters("expected an integer, got '" + s + "'");
    return v;
}

std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

FamilySpec parse_family(std::span<const std::string> tokens) {
    std::vector<std::string> parts;
    if (tokens.size() == 1 && tokens[0].find(':') != std::string::npos) {
        std::string t = tokens[0];
        std::size_t start = 0;
        while (true) {
            auto colon = t.find(':', start);
            parts.push_back(t.substr(start, colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
    } else {
        parts.assign(tokens.begin(), tokens.end());
    }
    if (parts.empty()) throw InvalidParameters("missing family name");
    const std::string name = lowercase(parts[0]);
    auto expect = [&](std::size_t n, const char* usage) {
        if (parts.size() != n + 1) throw InvalidParameters(std::string("usage: ") + usage);
    };
    if (name == "johnson" || name == "j") {
        expect(2, "johnson N K");
        return JohnsonParams{parse_int(parts[1]), parse_int(parts[2])};
    }
    if (name == "grassmann") {
        expect(3, "grassmann Q N K");
        return GrassmannParams{parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3])};
    }
    if (name == "hamming" || name == "h") {
        expect(2, "hamming D E");
        return HammingParams{parse_int(parts[1]), parse_int(parts[2])};
    }
    if (name == "dualpolar" || name == "dual-polar") {
        expect(3, "dualpolar {C|B|D|Dplus} D Q");
        return DualPolarParams{parse_dual_polar_kind(parts[1]), parse_int(parts[2]), parse_int(parts[3])};
    }
    throw InvalidParameters("unknown family '" + parts[0] + "' (johnson, grassmann, hamming, dualpolar)");
}

// ---------------------------------------------------------------- integers

long checked_pow(long base, int exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    long r = 1;
    for (int i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("integer overflow in power");
    return r;
}

long q_int(int m, int q) {
    if (m < 0) throw std::invalid_argument("q_int: negative m");
    long s = 0, term = 1;
    for (int i = 0; i < m; ++i) {
        if (__builtin_add_overflow(s, term, &s)) throw std::overflow_error("q_int overflow");
        if (i + 1 < m && __builtin_mul_overflow(term, static_cast<long>(q), &term))
            throw std::overflow_error("q_int overflow");
    }
    return s;
}

long q_binomial(int n, int k, int q) {
    if (k < 0 || n < 0 || k > n) return 0;
    // Pascal rule qbinom(n,k) = qbinom(n-1,k-1) + q^k qbinom(n-1,k) keeps everything integral.
    std::vector<long> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            long scaled = 0;
            if (__builtin_mul_overflow(checked_pow(q, j), row[static_cast<std::size_t>(j)], &scaled) ||
                __builtin_add_overflow(scaled, row[static_cast<std::size_t>(j) - 1], &row[static_cast<std::size_t>(j)]))
                throw std::overflow_error("q_binomial overflow");
        }
    }
    return row[static_cast<std::size_t>(k)];
}

long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        long num = 0;
        if (__builtin_mul_overflow(r, static_cast<long>(n - k + i), &num)) throw std::overflow_error("binomial");
        r = num / i;
    }
    return r;
}

long dual_polar_level_size(const DualPolarParams& p, int i) {
    long size = q_binomial(p.d, i, p.q);
    for (int j = 0; j < i; ++j) {
        long factor = checked_pow(p.q, p.d + p.e() - j - 1) + 1;
        if (__builtin_mul_overflow(size, factor, &size)) throw std::overflow_error("level size");
    }
    return size;
}

long expected_vertex_count(const FamilySpec& f) {
    struct Visitor {
        long operator()(const JohnsonParams& p) const { return binomial(p.n, p.k); }
        long operator()(const GrassmannParams& p) const { return q_binomial(p.n, p.k, p.q); }
        long operator()(const HammingParams& p) const { return checked_pow(p.e, p.d); }
        long operator()(const DualPolarParams& p) const { return dual_polar_level_size(p, p.d); }
        long operator()(const CustomGraph&) const { return -1; }
    };
    return std::visit(Visitor{}, f);
}

// ---------------------------------------------------------------- lattices

std::string to_string(const LatticeKey& key) {
    struct Visitor {
        std::string operator()(const Top&) const { return "1^"; }
        std::string operator()(const Subset& s) const {
            std::string out = "{";
            for (std::size_t i = 0; i < s.items.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(s.items[i]);
            }
            return out + "}";
        }
        std::string operator()(const Word& w) const {
            std::string out;
            for (int x : w.letters) out += std::to_string(x);
            return out.empty() ? "()" : out;
        }
        std::string operator()(const Subspace& s) const { return s.to_string(); }
    };
    return std::visit(Visitor{}, key);
}

std::optional<RankedLattice::Id> RankedLattice::find(const LatticeKey& key) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), key,
                               [](const auto& entry, const LatticeKey& k) { return entry.first < k; });
    if (it == index_.end() || it->first != key) return std::nullopt;
    return it->second;
}

bool RankedLattice::leq(Id a, Id b) const {
    if (b == top()) return true;
    if (a == top()) return false;
    if (ranks_[a] > ranks_[b]) return false;
    return below(a, b);
}

RankedLattice::Id RankedLattice::meet(Id a, Id b) const {
    if (a == top()) return b;
    if (b == top()) return a;
    auto id = find(meet_key(a, b));
    if (!id) throw std::logic_error("meet left the lattice");
    return *id;
}

RankedLattice::Id RankedLattice::join(Id a, Id b) const {
    if (a == top() || b == top()) return top();
    auto k = join_key(a, b);
    if (!k) return top();
    auto id = find(*k);
    return id ? *id : top();
}

void RankedLattice::add_level(std::vector<LatticeKey> keys) {
    std::sort(keys.begin(), keys.end());
    const int r = static_cast<int>(levels_.size());
    std::vector<Id> ids;
    for (auto& k : keys) {
        ids.push_back(keys_.size());
        keys_.push_back(std::move(k));
        ranks_.push_back(r);
    }
    levels_.push_back(std::move(ids));
}

void RankedLattice::finish() {
    keys_.push_back(Top{});
    ranks_.push_back(static_cast<int>(levels_.size()));
    index_.clear();
    for (Id i = 0; i < keys_.size(); ++i) index_.emplace_back(keys_[i], i);
    std::sort(index_.begin(), index_.end());
}

namespace {

class SubsetLattice final : public RankedLattice {
public:
    SubsetLattice(int n, int k) {
        for (int r = 0; r <= k; ++r) {
            std::vector<LatticeKey> level;
            std::vector<int> pick(static_cast<std::size_t>(r));
            auto rec = [&](auto& self, int next, int filled) -> void {
                if (filled == r) {
                    level.push_back(Subset{pick});
                    return;
                }
                for (int x = next; x <= n; ++x) {
                    pick[static_cast<std::size_t>(filled)] = x;
                    self(self, x + 1, filled + 1);
                }
            };
            rec(rec, 1, 0);
            add_level(std::move(level));
        }
        finish();
    }

protected:
    bool below(Id a, Id b) const override {
        const auto& x = std::get<Subset>(key(a)).items;
        const auto& y = std::get<Subset>(key(b)).items;
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    }
    LatticeKey meet_key(Id a, Id b) const override {
        const auto& x = std::get<Subset>(key(a)).items;
        const auto& y = std::get<Subset>(key(b)).items;
        Subset out;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out.items));
        return out;
    }
    std::optional<LatticeKey> join_key(Id a, Id b) const override {
        const auto& x = std::get<Subset>(key(a)).items;
        const auto& y = std::get<Subset>(key(b)).items;
        Subset out;
        std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out.items));
        return out; // absent from L when too large, so join() maps it to the top
    }
};

class WordLattice final : public RankedLattice {
public:
    WordLattice(int d, int e) {
        std::vector<std::vector<LatticeKey>> levels(static_cast<std::size_t>(d) + 1);
        std::vector<int> w(static_cast<std::size_t>(d), 0);
        while (true) {
            int nonzero = static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x != 0; }));
            levels[static_cast<std::size_t>(nonzero)].push_back(Word{w});
            int i = d - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == e) w[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
        for (auto& level : levels) add_level(std::move(level));
        finish();
    }

protected:
    bool below(Id a, Id b) const override {
        const auto& u = std::get<Word>(key(a)).letters;
        const auto& v = std::get<Word>(key(b)).letters;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != 0 && v[i] != u[i]) return false;
        return true;
    }
    LatticeKey meet_key(Id a, Id b) const override {
        const auto& u = std::get<Word>(key(a)).letters;
        const auto& v = std::get<Word>(key(b)).letters;
        Word out{std::vector<int>(u.size(), 0)};
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] == v[i]) out.letters[i] = u[i];
        return out;
    }
    std::optional<LatticeKey> join_key(Id a, Id b) const override {
        const auto& u = std::get<Word>(key(a)).letters;
        const auto& v = std::get<Word>(key(b)).letters;
        Word out{u};
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] != 0 && v[i] != 0 && u[i] != v[i]) return std::nullopt;
            if (u[i] == 0) out.letters[i] = v[i];
        }
        return out;
    }
};

class SubspaceLattice final : public RankedLattice {
public:
    SubspaceLattice(PrimeField field, std::vector<std::set<Subspace>> levels) : field_(field) {
        for (auto& level : levels) add_level(std::vector<LatticeKey>(level.begin(), level.end()));
        finish();
    }

protected:
    bool below(Id a, Id b) const override {
        return contains(std::get<Subspace>(key(b)), std::get<Subspace>(key(a)), field_);
    }
    LatticeKey meet_key(Id a, Id b) const override {
        return intersection(std::get<Subspace>(key(a)), std::get<Subspace>(key(b)), field_);
    }
    // Too large (Grassmann) or not totally singular (dual polar) spans are absent, hence the top.
    std::optional<LatticeKey> join_key(Id a, Id b) const override {
        return span(std::get<Subspace>(key(a)), std::get<Subspace>(key(b)), field_);
    }

private:
    PrimeField field_;
};

template <class Accept>
std::vector<std::set<Subspace>> subspace_levels(int ambient, int max_dim, const PrimeField& f,
                                                const std::vector<FieldVector>& candidates, Accept accept) {
    std::vector<std::set<Subspace>> levels(static_cast<std::size_t>(max_dim) + 1);
    levels[0].insert(Subspace{ambient, {}});
    for (int r = 0; r < max_dim; ++r) {
        for (const auto& w : levels[static_cast<std::size_t>(r)]) {
            for (const auto& x : candidates) {
                if (!accept(w, x) || contains_vector(w, x, f)) continue;
                Subspace s = w;
                s.rows.push_back(x);
                levels[static_cast<std::size_t>(r) + 1].insert(make_subspace(ambient, std::move(s.rows), f));
            }
        }
    }
    return levels;
}

void check_budget(const FamilySpec& f, std::size_t budget) {
    long count = 0;
    try {
        count = expected_vertex_count(f);
    } catch (const std::overflow_error&) {
        throw BudgetExceeded(display_name(f) + " has too many vertices to count");
    }
    if (count < 0 || static_cast<std::size_t>(count) > budget)
        throw BudgetExceeded(display_name(f) + " has " + std::to_string(count) + " vertices (budget " +
                             std::to_string(budget) + ")");
}

template <class Adjacent>
std::vector<std::uint8_t> bfs_distances(std::size_t n, Adjacent adjacent) {
    std::vector<std::vector<std::size_t>> nbrs(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (adjacent(x, y)) {
                nbrs[x].push_back(y);
                nbrs[y].push_back(x);
            }
    constexpr std::uint8_t unseen = std::numeric_limits<std::uint8_t>::max();
    std::vector<std::uint8_t> dist(n * n, unseen);
    for (std::size_t s = 0; s < n; ++s) {
        std::deque<std::size_t> queue{s};
        dist[s * n + s] = 0;
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t y : nbrs[x]) {
                if (dist[s * n + y] != unseen) continue;
                dist[s * n + y] = static_cast<std::uint8_t>(dist[s * n + x] + 1);
                queue.push_back(y);
            }
        }
    }
    for (auto d : dist)
        if (d == unseen) throw VerificationFailure("graph is disconnected");
    return dist;
}

template <class Adjacent>
FamilyInstance assemble(FamilySpec spec, std::shared_ptr<const RankedLattice> lattice, int diameter,
                        Adjacent adjacent) {
    FamilyInstance inst;
    inst.lattice = std::move(lattice);
    inst.graph.family = std::move(spec);
    inst.graph.diameter = diameter;
    for (auto id : inst.lattice->level(diameter)) inst.graph.vertices.push_back(inst.lattice->key(id));
    inst.graph.dist = bfs_distances(inst.graph.size(), [&](std::size_t x, std::size_t y) {
        return adjacent(inst.graph.vertices[x], inst.graph.vertices[y]);
    });
    int observed = *std::max_element(inst.graph.dist.begin(), inst.graph.dist.end());
    if (observed != diameter)
        throw VerificationFailure(display_name(inst.graph.family) + ": diameter " + std::to_string(observed) +
                                  ", expected " + std::to_string(diameter));
    return inst;
}

} // namespace

FamilyInstance build_johnson(int n, int k, std::size_t vertex_budget) {
    if (k < 1 || n <= k) throw InvalidParameters("J(n,k) needs 1 <= k < n");
    if (n < 2 * k) k = n - k; // complement map J(n,k) ~ J(n,n-k)
    FamilySpec spec = JohnsonParams{n, k};
    check_budget(spec, vertex_budget);
    auto lattice = std::make_shared<SubsetLattice>(n, k);
    return assemble(spec, lattice, k, [k](const VertexKey& a, const VertexKey& b) {
        const auto& x = std::get<Subset>(a).items;
        const auto& y = std::get<Subset>(b).items;
        std::vector<int> common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        return static_cast<int>(common.size()) == k - 1;
    });
}

FamilyInstance build_grassmann(int q, int n, int k, std::size_t vertex_budget) {
    if (!is_prime(q)) throw InvalidParameters("Grassmann graphs need a prime q (got " + std::to_string(q) + ")");
    if (k < 1 || n <= k) throw InvalidParameters("J_q(n,k) needs 1 <= k < n");
    if (n < 2 * k) k = n - k; // orthogonal complement
    if (k < 2) throw InvalidParameters("J_q(n,1) is complete; use johnson with n = [n]_q");
    FamilySpec spec = GrassmannParams{q, n, k};
    check_budget(spec, vertex_budget);
    PrimeField f(q);
    auto vectors = all_vectors(n, f);
    vectors.erase(vectors.begin()); // zero vector
    auto levels = subspace_levels(n, k, f, vectors, [](const Subspace&, const FieldVector&) { return true; });
    for (int i = 0; i <= k; ++i)
        if (static_cast<long>(levels[static_cast<std::size_t>(i)].size()) != q_binomial(n, i, q))
            throw VerificationFailure("subspace enumeration disagrees with the q-binomial count");
    auto lattice = std::make_shared<SubspaceLattice>(f, std::move(levels));
    return assemble(spec, lattice, k, [f, k](const VertexKey& a, const VertexKey& b) {
        return intersection(std::get<Subspace>(a), std::get<Subspace>(b), f).dim() == k - 1;
    });
}

FamilyInstance build_hamming(int d, int e, std::size_t vertex_budget) {
    if (d < 1 || e < 2) throw InvalidParameters("H(d,e) needs d >= 1 and e >= 2");
    FamilySpec spec = HammingParams{d, e};
    check_budget(spec, vertex_budget);
    auto lattice = std::make_shared<WordLattice>(d, e);
    return assemble(spec, lattice, d, [](const VertexKey& a, const VertexKey& b) {
        const auto& x = std::get<Word>(a).letters;
        const auto& y = std::get<Word>(b).letters;
        int diff = 0;
        for (std::size_t i = 0; i < x.size(); ++i) diff += x[i] != y[i];
        return diff == 1;
    });
}

FamilyInstance build_dual_polar(DualPolarKind kind, int d, int q, std::size_t vertex_budget) {
    if (d < 2) throw InvalidParameters("dual polar graphs need diameter d >= 2");
    if (!is_prime(q)) throw InvalidParameters("dual polar graphs need a prime q (got " + std::to_string(q) + ")");
    DualPolarParams params{kind, d, q};
    FamilySpec spec = params;
    check_budget(spec, vertex_budget);
    FormedSpace space(kind, d, q);
    const PrimeField& f = space.field();
    std::vector<FieldVector> singular;
    for (auto& v : all_vectors(space.dimension(), f)) {
        if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
        if (space.is_singular(v)) singular.push_back(std::move(v));
    }
    auto levels = subspace_levels(space.dimension(), d, f, singular, [&](const Subspace& w, const FieldVector& x) {
        for (const auto& row : w.rows)
            if (space.polar(row, x) != 0) return false;
        return true;
    });
    for (int i = 0; i <= d; ++i)
        if (static_cast<long>(levels[static_cast<std::size_t>(i)].size()) != dual_polar_level_size(params, i))
            throw VerificationFailure(display_name(spec) + ": |L_" + std::to_string(i) + "| = " +
                                      std::to_string(levels[static_cast<std::size_t>(i)].size()) +
                                      " disagrees with the closed form");
    auto lattice = std::make_shared<SubspaceLattice>(f, std::move(levels));
    return assemble(spec, lattice, d, [f, d](const VertexKey& a, const VertexKey& b) {
        return intersection(std::get<Subspace>(a), std::get<Subspace>(b), f).dim() == d - 1;
    });
}

FamilyInstance build_family(const FamilySpec& f, std::size_t vertex_budget) {
    struct Visitor {
        std::size_t budget;
        FamilyInstance operator()(const JohnsonParams& p) const { return build_johnson(p.n, p.k, budget); }
        FamilyInstance operator()(const GrassmannParams& p) const { return build_grassmann(p.q, p.n, p.k, budget); }
        FamilyInstance operator()(const HammingParams& p) const { return build_hamming(p.d, p.e, budget); }
        FamilyInstance operator()(const DualPolarParams& p) const {
            return build_dual_polar(p.kind, p.d, p.q, budget);
        }
        FamilyInstance operator()(const CustomGraph& p) const {
            throw InvalidParameters("custom graph '" + p.name + "' cannot be built from parameters");
        }
    };
    return std::visit(Visitor{vertex_budget}, f);
}

GraphInstance graph_from_edges(std::string name, std::size_t vertex_count,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::set<std::pair<std::size_t, std::size_t>> edge_set;
    for (auto [a, b] : edges) edge_set.insert({std::min(a, b), std::max(a, b)});
    GraphInstance g;
    g.family = CustomGraph{std::move(name)};
    for (std::size_t i = 0; i < vertex_count; ++i) g.vertices.push_back(Word{{static_cast<int>(i)}});
    g.dist = bfs_distances(vertex_count, [&](std::size_t x, std::size_t y) { return edge_set.count({x, y}) > 0; });
    g.diameter = *std::max_element(g.dist.begin(), g.dist.end());
    return g;
}

// ---------------------------------------------------------------- regularity

NotDistanceRegular::NotDistanceRegular(std::size_t x1, std::size_t y1, std::size_t x2, std::size_t y2, int i_,
                                       int j_)
    : std::runtime_error("not distance regular: pairs (" + std::to_string(x1) + "," + std::to_string(y1) + ") and (" +
                         std::to_string(x2) + "," + std::to_string(y2) + ") disagree on p_{" + std::to_string(i_) +
                         std::to_string(j_) + "}"),
      first_x(x1), first_y(y1), second_x(x2), second_y(y2), i(i_), j(j_) {}

IntersectionArray check_distance_regular(const GraphInstance& g) {
    const std::size_t n = g.size();
    const int D = g.diameter;
    const std::size_t w = static_cast<std::size_t>(D) + 1;
    IntersectionArray arr;
    arr.diameter = D;
    arr.values.assign(w * w * w, -1);
    std::vector<std::pair<std::size_t, std::size_t>> first_pair(w, {n, n});
    std::vector<long> counts(w * w);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t z = 0; z < n; ++z)
                ++counts[static_cast<std::size_t>(g.distance(x, z)) * w + static_cast<std::size_t>(g.distance(y, z))];
            const std::size_t k = static_cast<std::size_t>(g.distance(x, y));
            if (first_pair[k].first == n) {
                first_pair[k] = {x, y};
                for (std::size_t ij = 0; ij < w * w; ++ij) arr.values[ij * w + k] = counts[ij];
                continue;
            }
            for (std::size_t ij = 0; ij < w * w; ++ij)
                if (arr.values[ij * w + k] != counts[ij])
                    throw NotDistanceRegular(first_pair[k].first, first_pair[k].second, x, y,
                                             static_cast<int>(ij / w), static_cast<int>(ij % w));
        }
    }
    return arr;
}

// ---------------------------------------------------------------- forms

FormedSpace::FormedSpace(DualPolarKind kind, int d, int q) : kind_(kind), d_(d), n_(0), field_(q) {
    switch (kind) {
    case DualPolarKind::C:
    case DualPolarKind::D: n_ = 2 * d; break;
    case DualPolarKind::B: n_ = 2 * d + 1; break;
    case DualPolarKind::Dplus: n_ = 2 * d + 2; break;
    }
    if (kind == DualPolarKind::Dplus) {
        // x^2 + xy + a y^2 is anisotropic iff t^2 + t + a has no root in F_q
        for (int a = 0; a < q; ++a) {
            bool has_root = false;
            for (int t = 0; t < q && !has_root; ++t) has_root = field_.add(field_.add(field_.mul(t, t), t), a) == 0;
            if (!has_root) {
                anisotropic_constant_ = a;
                return;
            }
        }
        throw std::logic_error("no irreducible t^2 + t + a over F_q");
    }
}

int FormedSpace::quadratic(const FieldVector& v) const {
    long s = 0;
    for (int i = 0; i < d_; ++i) s += static_cast<long>(v[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(d_ + i)];
    if (kind_ == DualPolarKind::B) s += static_cast<long>(v[static_cast<std::size_t>(2 * d_)]) * v[static_cast<std::size_t>(2 * d_)];
    if (kind_ == DualPolarKind::Dplus) {
        const long x = v[static_cast<std::size_t>(2 * d_)], y = v[static_cast<std::size_t>(2 * d_ + 1)];
        s += x * x + x * y + anisotropic_constant_ * y * y;
    }
    return field_.reduce(s);
}

int FormedSpace::polar(const FieldVector& u, const FieldVector& v) const {
    if (kind_ == DualPolarKind::C) {
        long s = 0;
        for (int i = 0; i < d_; ++i) {
            const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(d_ + i);
            s += static_cast<long>(u[a]) * v[b] - static_cast<long>(u[b]) * v[a];
        }
        return field_.reduce(s);
    }
    FieldVector sum(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) sum[i] = field_.add(u[i], v[i]);
    return field_.sub(field_.sub(quadratic(sum), quadratic(u)), quadratic(v));
}

bool FormedSpace::is_singular(const FieldVector& v) const {
    return kind_ == DualPolarKind::C || quadratic(v) == 0;
}

bool FormedSpace::is_totally_singular(const Subspace& s) const {
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (!is_singular(s.rows[i])) return false;
        for (std::size_t j = i + 1; j < s.rows.size(); ++j)
            if (polar(s.rows[i], s.rows[j]) != 0) return false;
    }
    return true;
}

} // namespace norton
