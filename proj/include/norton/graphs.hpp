#pragma once

#include "norton/finite_field.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace norton {

inline constexpr std::size_t kDefaultVertexBudget = 10'000;

struct JohnsonParams {
    int n = 0;
    int k = 0;
    auto operator<=>(const JohnsonParams&) const = default;
};

struct GrassmannParams {
    int q = 0;
    int n = 0;
    int k = 0;
    auto operator<=>(const GrassmannParams&) const = default;
};

struct HammingParams {
    int d = 0;
    int e = 0; // alphabet size
    auto operator<=>(const HammingParams&) const = default;
};

// C: symplectic on F_q^{2d}; B: quadratic on F_q^{2d+1}; D: hyperbolic quadratic on F_q^{2d};
// Dplus: quadratic of Witt index d on F_q^{2d+2}.
enum class DualPolarKind { C, B, D, Dplus };

struct DualPolarParams {
    DualPolarKind kind = DualPolarKind::C;
    int d = 0;
    int q = 0;
    // The classical parameter e (0, 1 or 2); unrelated to the Hamming alphabet size.
    int e() const;
    auto operator<=>(const DualPolarParams&) const = default;
};

// Hand-made graphs for tests only; no lattice, no closed forms.
struct CustomGraph {
    std::string name;
    auto operator<=>(const CustomGraph&) const = default;
};

using FamilySpec = std::variant<JohnsonParams, GrassmannParams, HammingParams, DualPolarParams, CustomGraph>;

std::string display_name(const FamilySpec& f); // "J(3,1)", "J_2(4,2)", "H(2,3)", "D_2(2)"
std::string cache_id(const FamilySpec& f);     // "johnson-3-1", "dualpolar-D-2-2"
int family_diameter(const FamilySpec& f);
// Applies the complement isomorphism so that n >= 2k (Johnson, Grassmann).
FamilySpec canonical_family(const FamilySpec& f);

// Accepts "johnson 3 1" style token lists, or a single "johnson:3:1" token.
FamilySpec parse_family(std::span<const std::string> tokens);
std::string to_string(DualPolarKind k);
DualPolarKind parse_dual_polar_kind(const std::string& s);

struct Subset {
    std::vector<int> items; // sorted, 1-based
    auto operator<=>(const Subset&) const = default;
};

struct Word {
    std::vector<int> letters; // 1..e for vertices, 0..e for lattice elements
    auto operator<=>(const Word&) const = default;
};

struct Top {
    auto operator<=>(const Top&) const = default;
};

using LatticeKey = std::variant<Top, Subset, Word, Subspace>;
using VertexKey = LatticeKey;

std::string to_string(const LatticeKey& key);

/*
 * The ranked lattice L attached to a family: rank-i elements L_i for
 * 0 <= i <= diameter plus a top element. Elements are addressed by dense ids
 * assigned level by level in key order; the top gets the last id.
 */
class RankedLattice {
public:
    using Id = std::size_t;

    virtual ~RankedLattice() = default;

    std::size_t size() const { return keys_.size(); }
    int height() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Id>& level(int i) const { return levels_.at(static_cast<std::size_t>(i)); }
    Id top() const { return keys_.size() - 1; }
    Id bottom() const { return 0; }
    int rank(Id a) const { return ranks_[a]; }
    const LatticeKey& key(Id a) const { return keys_[a]; }
    std::optional<Id> find(const LatticeKey& key) const;
    std::string label(Id a) const { return to_string(keys_[a]); }

    bool leq(Id a, Id b) const;
    Id meet(Id a, Id b) const;
    Id join(Id a, Id b) const;

protected:
    // Levels must be added in increasing rank; finish() appends the top.
    void add_level(std::vector<LatticeKey> keys);
    void finish();

    // Family semantics on non-top elements.
    virtual bool below(Id a, Id b) const = 0;
    virtual LatticeKey meet_key(Id a, Id b) const = 0;
    // nullopt when the join leaves L (then it is the top)
    virtual std::optional<LatticeKey> join_key(Id a, Id b) const = 0;

private:
    std::vector<LatticeKey> keys_;
    std::vector<int> ranks_;
    std::vector<std::vector<Id>> levels_;
    std::vector<std::pair<LatticeKey, Id>> index_; // sorted by key
};

struct GraphInstance {
    FamilySpec family;
    std::vector<VertexKey> vertices;
    std::vector<std::uint8_t> dist; // row-major |X| x |X|
    int diameter = 0;

    std::size_t size() const { return vertices.size(); }
    int distance(std::size_t x, std::size_t y) const { return dist[x * vertices.size() + y]; }
};

// Vertices of the graph are the top-rank lattice elements L_d, in the same order.
struct FamilyInstance {
    GraphInstance graph;
    std::shared_ptr<const RankedLattice> lattice;

    const FamilySpec& family() const { return graph.family; }
};

FamilyInstance build_johnson(int n, int k, std::size_t vertex_budget = kDefaultVertexBudget);
FamilyInstance build_grassmann(int q, int n, int k, std::size_t vertex_budget = kDefaultVertexBudget);
FamilyInstance build_hamming(int d, int e, std::size_t vertex_budget = kDefaultVertexBudget);
FamilyInstance build_dual_polar(DualPolarKind kind, int d, int q,
                                std::size_t vertex_budget = kDefaultVertexBudget);
FamilyInstance build_family(const FamilySpec& f, std::size_t vertex_budget = kDefaultVertexBudget);

// Test fixture graphs: distances by breadth-first search over the given edges.
GraphInstance graph_from_edges(std::string name, std::size_t vertex_count,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Intersection numbers p_{ij}^k, flattened as [(i * (D+1) + j) * (D+1) + k].
struct IntersectionArray {
    int diameter = 0;
    std::vector<long> values;
    long p(int i, int j, int k) const {
        const int n = diameter + 1;
        return values[static_cast<std::size_t>((i * n + j) * n + k)];
    }
};

class NotDistanceRegular : public std::runtime_error {
public:
    NotDistanceRegular(std::size_t x1, std::size_t y1, std::size_t x2, std::size_t y2, int i, int j);
    // Two pairs at the same distance with different counts for (i, j).
    std::size_t first_x, first_y, second_x, second_y;
    int i, j;
};

IntersectionArray check_distance_regular(const GraphInstance& g);

// [m]_q = 1 + q + ... + q^(m-1); overflow throws std::overflow_error.
long q_int(int m, int q);
long q_binomial(int n, int k, int q);
long binomial(int n, int k);
long checked_pow(long base, int exp);

// Closed-form vertex count per family, used for budget checks before enumeration.
long expected_vertex_count(const FamilySpec& f);
// |L_i| for dual polar spaces: qbinom(d,i) * prod_{j<i} (q^{d+e-j-1} + 1).
long dual_polar_level_size(const DualPolarParams& p, int i);

/*
 * The form on a dual polar space. Orthogonal kinds are handled as quadratic
 * forms proper (also in characteristic 2): a subspace is totally singular iff
 * Q vanishes on a basis and the polar form vanishes on all basis pairs.
 */
class FormedSpace {
public:
    FormedSpace(DualPolarKind kind, int d, int q);

    int dimension() const { return n_; }
    const PrimeField& field() const { return field_; }
    bool is_singular(const FieldVector& v) const;
    int polar(const FieldVector& u, const FieldVector& v) const;
    bool is_totally_singular(const Subspace& s) const;

private:
    int quadratic(const FieldVector& v) const;

    DualPolarKind kind_;
    int d_;
    int n_;
    PrimeField field_;
    int anisotropic_constant_ = 0; // Dplus: t^2 + t + a irreducible
};

} // namespace norton
