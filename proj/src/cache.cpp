#include "norton/cache.hpp"

#include "norton/errors.hpp"

#include <fstream>
#include <unistd.h>

namespace norton {

using nlohmann::json;

CacheEntry make_cache_entry(const FamilyInstance& inst, const SpectralData& s, const NortonAlgebra& alg) {
    CacheEntry e{inst.family(), {}, inst.graph.dist, inst.graph.diameter, s.eigenvalues, s.multiplicities, alg};
    for (const auto& v : inst.graph.vertices) e.vertex_keys.push_back(to_string(v));
    return e;
}

json params_to_json(const FamilySpec& f) {
    struct Visitor {
        json operator()(const JohnsonParams& p) const { return {{"family", "johnson"}, {"n", p.n}, {"k", p.k}}; }
        json operator()(const GrassmannParams& p) const {
            return {{"family", "grassmann"}, {"q", p.q}, {"n", p.n}, {"k", p.k}};
        }
        json operator()(const HammingParams& p) const { return {{"family", "hamming"}, {"d", p.d}, {"e", p.e}}; }
        json operator()(const DualPolarParams& p) const {
            return {{"family", "dualpolar"}, {"kind", to_string(p.kind)}, {"d", p.d}, {"q", p.q}};
        }
        json operator()(const CustomGraph& p) const { return {{"family", "custom"}, {"name", p.name}}; }
    };
    return std::visit(Visitor{}, f);
}

FamilySpec params_from_json(const json& j) {
    const std::string family = j.at("family");
    if (family == "johnson") return JohnsonParams{j.at("n"), j.at("k")};
    if (family == "grassmann") return GrassmannParams{j.at("q"), j.at("n"), j.at("k")};
    if (family == "hamming") return HammingParams{j.at("d"), j.at("e")};
    if (family == "dualpolar")
        return DualPolarParams{parse_dual_polar_kind(j.at("kind")), j.at("d"), j.at("q")};
    if (family == "custom") return CustomGraph{j.at("name")};
    throw InvalidParameters("unknown family '" + family + "' in cache");
}

namespace {

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Vector vector_from_json(const json& j) {
    Vector v;
    for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

} // namespace

json to_json(const CacheEntry& e) {
    const auto& alg = e.algebra;
    const std::size_t n = e.vertex_keys.size();
    json dist = json::array();
    for (std::size_t x = 0; x < n; ++x)
        dist.push_back(std::vector<int>(e.dist.begin() + static_cast<std::ptrdiff_t>(x * n),
                                        e.dist.begin() + static_cast<std::ptrdiff_t>((x + 1) * n)));
    json coords = json::array();
    for (std::size_t r = 0; r < alg.spanning_coordinates.rows(); ++r)
        coords.push_back(vector_json(alg.spanning_coordinates.row(r)));
    // Sparse triples (i, j, k, value) of the nonzero structure constants.
    json constants = json::array();
    const std::size_t dim = alg.dimension();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (alg.op.constant(i, j, k) != 0) constants.push_back({i, j, k, to_string(alg.op.constant(i, j, k))});

    json a = {{"normalization", to_string(alg.normalization)},
              {"scale", to_string(alg.scale)},
              {"spanning_labels", alg.spanning_labels},
              {"basis", alg.basis},
              {"basis_labels", json::array()},
              {"spanning_coordinates", coords},
              {"dimension", dim},
              {"structure_constants", constants},
              {"lemma_scale", to_string(alg.lemma_scale)},
              {"pattern_u", vector_json(alg.pattern_u)},
              {"pattern_v", vector_json(alg.pattern_v)},
              {"pattern_span", vector_json(alg.pattern_span)}};
    for (auto pos : alg.basis) a["basis_labels"].push_back(alg.spanning_labels[pos]);
    if (alg.pattern_pair) a["pattern_pair"] = {alg.pattern_pair->first, alg.pattern_pair->second};

    return {{"version", kCacheVersion},
            {"name", display_name(e.family)},
            {"params", params_to_json(e.family)},
            {"diameter", e.diameter},
            {"vertex_keys", e.vertex_keys},
            {"dist_matrix", dist},
            {"eigenvalues", e.eigenvalues},
            {"multiplicities", e.multiplicities},
            {"algebra", a}};
}

CacheEntry cache_entry_from_json(const json& j) {
    if (j.at("version") != kCacheVersion) throw InvalidParameters("cache entry has a different version tag");
    CacheEntry e;
    e.family = params_from_json(j.at("params"));
    e.diameter = j.at("diameter");
    e.vertex_keys = j.at("vertex_keys").get<std::vector<std::string>>();
    for (const auto& row : j.at("dist_matrix"))
        for (const auto& x : row) e.dist.push_back(static_cast<std::uint8_t>(x.get<int>()));
    e.eigenvalues = j.at("eigenvalues").get<std::vector<long>>();
    e.multiplicities = j.at("multiplicities").get<std::vector<long>>();

    const json& a = j.at("algebra");
    NortonAlgebra& alg = e.algebra;
    alg.family = e.family;
    alg.normalization = a.at("normalization") == "bar" ? Normalization::bar : Normalization::check;
    alg.scale = parse_rational(a.at("scale").get<std::string>());
    alg.spanning_labels = a.at("spanning_labels").get<std::vector<std::string>>();
    alg.basis = a.at("basis").get<std::vector<std::size_t>>();
    const std::size_t dim = a.at("dimension");
    std::vector<Vector> rows;
    for (const auto& r : a.at("spanning_coordinates")) rows.push_back(vector_from_json(r));
    alg.spanning_coordinates = rows.empty() ? RationalMatrix(0, dim) : RationalMatrix::from_rows(rows);
    Vector constants(dim * dim * dim);
    for (const auto& t : a.at("structure_constants")) {
        const std::size_t i = t.at(0), jj = t.at(1), k = t.at(2);
        constants.at((i * dim + jj) * dim + k) = parse_rational(t.at(3).get<std::string>());
    }
    alg.op = BilinearOperation::bilinear(dim, std::move(constants));
    alg.lemma_scale = parse_rational(a.at("lemma_scale").get<std::string>());
    alg.pattern_u = vector_from_json(a.at("pattern_u"));
    alg.pattern_v = vector_from_json(a.at("pattern_v"));
    alg.pattern_span = vector_from_json(a.at("pattern_span"));
    if (a.contains("pattern_pair")) alg.pattern_pair = std::pair{a["pattern_pair"][0].get<std::size_t>(),
                                                                 a["pattern_pair"][1].get<std::size_t>()};
    return e;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const FamilySpec& f) {
    return dir / (cache_id(f) + "." + kCacheVersion + ".json");
}

void write_cache(const std::filesystem::path& dir, const CacheEntry& e) {
    std::filesystem::create_directories(dir);
    const auto target = cache_path(dir, e.family);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << to_json(e).dump() << '\n';
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::optional<CacheEntry> read_cache(const std::filesystem::path& dir, const FamilySpec& f) {
    const auto path = cache_path(dir, f);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error&) {
        return std::nullopt; // a truncated file is as good as none
    }
    if (!j.contains("version") || j["version"] != kCacheVersion) return std::nullopt;
    return cache_entry_from_json(j);
}

} // namespace norton
