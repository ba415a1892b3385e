#include "norton/cache.hpp"
#include "norton/classify.hpp"
#include "norton/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace norton;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
    std::vector<std::string> family;
    std::vector<std::string> instances;
    std::size_t m_max = 4;
    std::size_t m = 3;
    std::string strategy = "auto";
    std::size_t budget_vertices = kDefaultVertexBudget;
    std::size_t budget_fingerprint = kDefaultFingerprintBudget;
    std::string cache_dir;
    std::string format; // empty: csv for table, json elsewhere
    bool no_cache = false;
    bool reports = false;
};

bool is_exceptional(const FamilySpec& f) {
    auto* p = std::get_if<DualPolarParams>(&f);
    return p && p->kind == DualPolarKind::D && p->d == 2 && p->q == 2;
}

// Full pipeline with every self-check; throws on the first inconsistency.
CacheEntry build_entry(const FamilySpec& spec, std::size_t vertex_budget, json* summary) {
    FamilyInstance inst = build_family(spec, vertex_budget);
    SpectralData s = compute_spectrum(inst.graph);
    const FamilySpec& f = inst.family();
    for (int i = 0; i <= inst.graph.diameter; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (s.eigenvalues[idx] != closed_form_eigenvalue(f, i) ||
            s.multiplicities[idx] != closed_form_multiplicity(f, i))
            throw VerificationFailure(display_name(f) + ": spectrum disagrees with the closed form at i=" +
                                      std::to_string(i));
    }
    FormulaCheck check = verify_formula_vs_oracle(inst, s);
    if (check.max_discrepancy != 0)
        throw VerificationFailure(display_name(f) + ": product formula differs from the projection by " +
                                  to_string(check.max_discrepancy));
    NortonAlgebra alg = structure_constants(inst, s);
    if (!alg.op.is_commutative()) throw VerificationFailure(display_name(f) + ": structure constants not symmetric");
    if (summary) {
        *summary = {{"instance", display_name(f)},
                    {"params", params_to_json(f)},
                    {"vertices", inst.graph.size()},
                    {"diameter", inst.graph.diameter},
                    {"eigenvalues", s.eigenvalues},
                    {"multiplicities", s.multiplicities},
                    {"dim_v1", alg.dimension()},
                    {"normalization", to_string(alg.normalization)},
                    {"formula_pairs_checked", check.pairs},
                    {"formula_max_discrepancy", to_string(check.max_discrepancy)},
                    {"predicted", to_string(predicted_branch(f))}};
        if (is_exceptional(f)) (*summary)["note"] = "exceptional case D_2(2)";
    }
    return make_cache_entry(inst, s, alg);
}

std::string cache_dir_of(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* env = std::getenv("NORTON_CACHE_DIR"); env && *env) return env;
    return "norton-cache";
}

// Cached algebra when available, otherwise a fresh build that is then cached.
CacheEntry obtain(const RunConfig& cfg, const FamilySpec& spec, bool* from_cache = nullptr) {
    const FamilySpec f = canonical_family(spec);
    if (!cfg.no_cache)
        if (auto hit = read_cache(cache_dir_of(cfg), f)) {
            if (from_cache) *from_cache = true;
            return std::move(*hit);
        }
    if (from_cache) *from_cache = false;
    CacheEntry entry = build_entry(f, cfg.budget_vertices, nullptr);
    if (!cfg.no_cache) write_cache(cache_dir_of(cfg), entry);
    return entry;
}

void check_m(std::size_t m) {
    if (m > kDefaultEnumerationLimit)
        throw InvalidParameters("m must be at most " + std::to_string(kDefaultEnumerationLimit));
}

int cmd_build(const RunConfig& cfg) {
    const FamilySpec f = canonical_family(parse_family(cfg.family));
    json summary;
    CacheEntry entry = build_entry(f, cfg.budget_vertices, &summary);
    if (!cfg.no_cache) {
        write_cache(cache_dir_of(cfg), entry);
        summary["cache"] = cache_path(cache_dir_of(cfg), f).string();
    }
    std::cout << summary.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    check_m(cfg.m_max);
    const FamilySpec f = parse_family(cfg.family);
    bool from_cache = false;
    CacheEntry entry = obtain(cfg, f, &from_cache);
    const NortonAlgebra& alg = entry.algebra;
    ClassificationVerdict v = verify_theorem1(alg, cfg.m_max, parse_strategy(cfg.strategy), cfg.budget_fingerprint);

    bool spectrum_ok = true;
    for (int i = 0; i <= entry.diameter; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        spectrum_ok = spectrum_ok && entry.eigenvalues[idx] == closed_form_eigenvalue(alg.family, i) &&
                      entry.multiplicities[idx] == closed_form_multiplicity(alg.family, i);
    }
    std::optional<LemmaCheck> lemma;
    if (v.predicted != Branch::associative && alg.pattern_pair)
        lemma = check_one_off_lemma(alg, std::min<std::size_t>(cfg.m_max, 5), 10);
    const bool pass = v.pass && spectrum_ok && (!lemma || lemma->ok());

    if (cfg.format == "csv") {
        std::cout << "m,observed,expected,method\n";
        for (std::size_t m = 0; m <= cfg.m_max; ++m)
            std::cout << m << ',' << v.observed[m] << ',' << v.expected[m].get_str() << ','
                      << to_string(v.reports[m].method) << '\n';
    } else {
        json out = to_json(v, cfg.reports);
        out["source"] = from_cache ? "cache" : "built";
        out["spectrum_matches_closed_form"] = spectrum_ok;
        if (lemma)
            out["one_off_lemma"] = {{"evaluations", lemma->evaluations},
                                    {"failures", lemma->failures},
                                    {"first_failure", lemma->first_failure}};
        out["pass"] = pass;
        std::cout << out.dump(2) << '\n';
    }
    return pass ? kExitOk : kExitMismatch;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InvalidParameters*>(&e)) return kExitInvalid;
    if (dynamic_cast<const BudgetExceeded*>(&e)) return kExitBudget;
    return kExitMismatch;
}

int cmd_table(const RunConfig& cfg) {
    check_m(cfg.m_max);
    const Strategy strategy = parse_strategy(cfg.strategy);
    struct Column {
        std::string name;
        std::vector<std::string> cells;
        std::string error;
    };
    std::vector<Column> columns;
    int status = kExitOk;
    json verdicts = json::array();
    for (const auto& token : cfg.instances) {
        Column col{token, {}, {}};
        try {
            const std::vector<std::string> one{token};
            const FamilySpec f = parse_family(one);
            CacheEntry entry = obtain(cfg, f);
            col.name = display_name(entry.family);
            ClassificationVerdict v = verify_theorem1(entry.algebra, cfg.m_max, strategy, cfg.budget_fingerprint);
            for (std::size_t m = 0; m <= cfg.m_max; ++m) {
                std::string cell = std::to_string(v.observed[m]);
                if (BigInt(static_cast<unsigned long>(v.observed[m])) != v.expected[m])
                    cell += " (expected " + v.expected[m].get_str() + ")";
                col.cells.push_back(cell);
            }
            if (!v.pass && status == kExitOk) status = kExitMismatch;
            verdicts.push_back(to_json(v));
        } catch (const std::exception& e) {
            col.error = e.what();
            col.cells.assign(cfg.m_max + 1, "error");
            if (status == kExitOk) status = exit_code_for(e);
            verdicts.push_back({{"instance", token}, {"error", col.error}});
            std::cerr << token << ": " << e.what() << '\n';
        }
        columns.push_back(std::move(col));
    }
    if (cfg.format == "json") {
        std::cout << verdicts.dump(2) << '\n';
        return status;
    }
    std::cout << "m";
    for (const auto& c : columns) std::cout << ",\"" << c.name << '"';
    std::cout << '\n';
    if (!columns.empty())
        for (std::size_t m = 0; m <= cfg.m_max; ++m) {
            std::cout << m;
            for (const auto& c : columns) std::cout << ',' << c.cells[m];
            std::cout << '\n';
        }
    return status;
}

int cmd_classes(const RunConfig& cfg) {
    check_m(cfg.m);
    CacheEntry entry = obtain(cfg, parse_family(cfg.family));
    EquivalenceReport r =
        count_norton_classes(entry.algebra, cfg.m, parse_strategy(cfg.strategy), cfg.budget_fingerprint);
    json out = to_json(r);
    out["instance"] = display_name(entry.family);
    const auto trees = enumerate_trees(cfg.m);
    auto& reps = out["representatives"] = json::array();
    for (const auto& cls : r.classes) reps.push_back(trees[cls.front()].to_string());
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg) {
    CacheEntry entry = obtain(cfg, parse_family(cfg.family));
    bool ok = true;
    if (cfg.format == "csv") std::cout << "i,eigenvalue,multiplicity,closed_eigenvalue,closed_multiplicity\n";
    json rows = json::array();
    for (int i = 0; i <= entry.diameter; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const long th = closed_form_eigenvalue(entry.family, i), mu = closed_form_multiplicity(entry.family, i);
        ok = ok && th == entry.eigenvalues[idx] && mu == entry.multiplicities[idx];
        if (cfg.format == "csv")
            std::cout << i << ',' << entry.eigenvalues[idx] << ',' << entry.multiplicities[idx] << ',' << th << ','
                      << mu << '\n';
        rows.push_back({{"i", i},
                        {"eigenvalue", entry.eigenvalues[idx]},
                        {"multiplicity", entry.multiplicities[idx]},
                        {"closed_form_eigenvalue", th},
                        {"closed_form_multiplicity", mu}});
    }
    if (cfg.format != "csv")
        std::cout << json{{"instance", display_name(entry.family)}, {"spectrum", rows}, {"matches_closed_form", ok}}
                         .dump(2)
                  << '\n';
    return ok ? kExitOk : kExitMismatch;
}

int cmd_product_table(const RunConfig& cfg) {
    CacheEntry entry = obtain(cfg, parse_family(cfg.family));
    const NortonAlgebra& alg = entry.algebra;
    const std::size_t dim = alg.dimension();
    std::vector<std::string> labels;
    for (auto pos : alg.basis) labels.push_back(alg.spanning_labels[pos]);
    if (cfg.format == "csv") {
        std::cout << "left,right,component,coefficient\n";
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    if (alg.op.constant(i, j, k) != 0)
                        std::cout << '"' << labels[i] << "\",\"" << labels[j] << "\",\"" << labels[k] << "\","
                                  << to_string(alg.op.constant(i, j, k)) << '\n';
        return kExitOk;
    }
    json products = json::array();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            json terms = json::object();
            for (std::size_t k = 0; k < dim; ++k)
                if (alg.op.constant(i, j, k) != 0) terms[labels[k]] = to_string(alg.op.constant(i, j, k));
            products.push_back({{"left", labels[i]}, {"right", labels[j]}, {"product", terms}});
        }
    std::cout << json{{"instance", display_name(entry.family)},
                      {"normalization", to_string(alg.normalization)},
                      {"scale", to_string(alg.scale)},
                      {"basis", labels},
                      {"products", products}}
                     .dump(2)
              << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Norton algebras of distance regular graphs: spectra, products and nonassociativity counts"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--strategy", cfg.strategy, "tensor, pattern or auto")
            ->check(CLI::IsMember({"tensor", "pattern", "auto"}));
        sub->add_option("--budget-vertices", cfg.budget_vertices, "largest vertex count to construct")
            ->check(CLI::PositiveNumber);
        sub->add_option("--budget-fingerprint", cfg.budget_fingerprint, "largest fingerprint size in rationals")
            ->check(CLI::PositiveNumber);
        sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default $NORTON_CACHE_DIR or ./norton-cache)");
        sub->add_flag("--no-cache", cfg.no_cache, "neither read nor write the cache");
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("family", cfg.family, "e.g. johnson 3 1, grassmann 2 4 2, hamming 2 3, dualpolar D 2 2")
            ->required();
    };

    struct Command {
        CLI::App* app;
        int (*run)(const RunConfig&);
    };
    std::vector<Command> commands;

    auto* build = app.add_subcommand("build", "construct an instance, check it and write the cache");
    add_family(build);
    add_common(build);
    commands.push_back({build, cmd_build});

    auto* verify = app.add_subcommand("verify", "compare class counts with the predicted branch");
    add_family(verify);
    add_common(verify);
    verify->add_option("--m-max", cfg.m_max, "largest tree size");
    verify->add_flag("--reports", cfg.reports, "include the class partitions");
    commands.push_back({verify, cmd_verify});

    auto* table = app.add_subcommand("table", "class counts for several instances, one column each");
    table->add_option("instances", cfg.instances, "instances such as johnson:3:1 hamming:2:2");
    add_common(table);
    table->add_option("--m-max", cfg.m_max, "largest tree size");
    commands.push_back({table, cmd_table});

    auto* classes = app.add_subcommand("classes", "partition of the trees with m internal nodes");
    add_family(classes);
    add_common(classes);
    classes->add_option("--m", cfg.m, "tree size")->required();
    commands.push_back({classes, cmd_classes});

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and multiplicities");
    add_family(spectrum);
    add_common(spectrum);
    commands.push_back({spectrum, cmd_spectrum});

    auto* products = app.add_subcommand("product-table", "structure constants in the chosen basis");
    add_family(products);
    add_common(products);
    commands.push_back({products, cmd_product_table});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }
    try {
        for (auto& c : commands)
            if (c.app->parsed()) return c.run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitInvalid;
}
