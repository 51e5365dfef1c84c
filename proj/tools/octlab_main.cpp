// Command-line front end: enumeration, verification suites, eigenproblem
// solving, and report emission for scripting and CI.
//
// Exit codes: 0 all checks pass, 1 check failures, 2 usage/config errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "octlab/catalog.hpp"
#include "octlab/derivations.hpp"
#include "octlab/invariance.hpp"
#include "octlab/lorentz.hpp"
#include "octlab/rng.hpp"
#include "octlab/transforms.hpp"
#include "octlab/wave_config.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace octlab;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string out;
    std::uint64_t seed = 12345;
    double tolerance = 0.0;  // 0: per-suite defaults
};

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << text;
}

void emit(const GlobalOpts& opts, const ordered_json& j) {
    const std::string text = j.dump(2) + "\n";
    if (opts.out.empty()) {
        std::cout << text;
    } else {
        write_text(opts.out, text);
    }
}

int cmd_enumerate(const GlobalOpts& opts, bool with_candidates, const std::string& dir) {
    const std::filesystem::path out = dir.empty() ? "." : dir;
    std::filesystem::create_directories(out);

    const Catalog catalog = valid_algebras(kernels::Exec::Parallel, opts.seed);
    for (const auto& table : catalog.tables) {
        write_text(out / (table->id() + ".table"), table->to_text());
    }

    const auto report = automorphism_group_check();
    const auto classes = chirality_classes(catalog);

    ordered_json summary;
    summary["count"] = catalog.size();
    summary["seed"] = opts.seed;
    summary["tables"] = ordered_json::array();
    for (int i = 0; i < catalog.size(); ++i) {
        summary["tables"].push_back({{"id", catalog.tables[static_cast<std::size_t>(i)]->id()},
                                     {"parity_bits", catalog.masks[static_cast<std::size_t>(i)]}});
    }
    for (int c = 0; c < 2; ++c) {
        ordered_json ids = ordered_json::array();
        for (int i : classes[static_cast<std::size_t>(c)]) {
            ids.push_back(catalog.tables[static_cast<std::size_t>(i)]->id());
        }
        summary["chirality_classes"].push_back(ids);
    }
    // Cayley table of the sixteen labels, entries are label bit patterns.
    ordered_json gt = ordered_json::array();
    for (int i = 0; i < 16; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < 16; ++j) row.push_back(i ^ j);
        gt.push_back(row);
    }
    summary["group_table"] = gt;
    summary["group_check"] = report.to_json();
    write_text(out / "summary.json", summary.dump(2) + "\n");

    if (with_candidates) {
        const auto candidates = enumerate_candidates();
        std::vector<char> flags(candidates.size(), 0);
        kernels::filter_alternative(candidates, flags, kernels::Exec::Parallel);
        ordered_json cj = ordered_json::array();
        for (std::size_t m = 0; m < candidates.size(); ++m) {
            cj.push_back({{"parity_bits", m}, {"alternative", flags[m] != 0}});
        }
        write_text(out / "candidates.json", cj.dump(2) + "\n");
    }

    return (catalog.size() == 16 && report.passed()) ? kExitPass : kExitCheckFailed;
}

std::vector<TablePtr> selected_tables(const std::string& table_id) {
    if (table_id.empty()) return canonical_catalog().tables;
    if (std::filesystem::exists(table_id)) {
        std::ifstream f(table_id);
        return {StructureTable::from_text(f)};
    }
    return {table_by_id(table_id)};
}

int cmd_verify(const GlobalOpts& opts, const std::string& suite, const std::string& table_id) {
    const double tol = opts.tolerance > 0.0 ? opts.tolerance : 1e-12;
    const auto tables = selected_tables(table_id);
    ordered_json out;
    out["command"] = "verify";
    out["suite"] = suite;
    out["seed"] = opts.seed;
    out["tolerance"] = tol;
    out["reports"] = ordered_json::array();
    bool all_passed = true;

    auto push = [&](const std::string& table, const VerificationReport& r) {
        ordered_json j = r.to_json();
        if (!table.empty()) j["table"] = table;
        out["reports"].push_back(std::move(j));
        all_passed = all_passed && r.passed();
    };

    const bool all = suite == "all";
    if (all || suite == "pauli") {
        push("H0", verify_pauli(tol));
    }
    if (all || suite == "lorentz") {
        for (const auto& t : tables) {
            auto gen = build_generators(t);
            auto r = verify_lorentz(gen, tol);
            const auto symbols = generator_matrix_symbols(gen);
            r.metrics["matches_reference_symbols"] =
                symbols == reference_matrix_symbols() ? 1.0 : 0.0;
            push(t->id(), r);
        }
    }
    if (all || suite == "rassoc") {
        for (const auto& t : tables) {
            push(t->id(), verify_r_associator(build_generators(t), tol));
        }
    }
    if (all || suite == "spin") {
        for (const auto& t : tables) {
            push(t->id(), verify_spin_from_r(build_generators(t), tol));
        }
    }
    if (all || suite == "fourtuple") {
        for (const auto& t : tables) {
            push(t->id(), verify_four_tuple(t, tol));
        }
    }
    if (all || suite == "derivations") {
        for (const auto& t : tables) {
            const auto fp = derivation_fingerprint(t);
            VerificationReport r;
            r.identity = "derivation span fingerprints";
            r.total_cases = 9;
            if (fp.der_dim != 14) {
                r.fail({}, "span dimension " + std::to_string(fp.der_dim), "14", 1.0);
            }
            for (int k = 1; k <= 7; ++k) {
                const int dim = fp.stabilizer_dims[static_cast<std::size_t>(k - 1)];
                if (dim != 8) {
                    r.fail({k}, "stabilizer dimension " + std::to_string(dim), "8", 1.0);
                }
            }
            if (fp.closure_residual > 1e-9) {
                r.fail({}, "bracket leaves the span", "closure", fp.closure_residual);
            }
            r.metrics["der_dim"] = fp.der_dim;
            r.metrics["closure_residual"] = fp.closure_residual;
            ordered_json j = r.to_json();
            j["table_id"] = fp.table_id;
            j["der_dim"] = fp.der_dim;
            j["stabilizer_dims"] = fp.stabilizer_dims;
            j["closure_residual"] = fp.closure_residual;
            out["reports"].push_back(std::move(j));
            all_passed = all_passed && r.passed();
        }
    }
    if (all || suite == "leibniz") {
        const double ltol = opts.tolerance > 0.0 ? opts.tolerance : 1e-10;
        for (const auto& t : tables) {
            Rng rng(opts.seed);
            const Element u(t, rng.next_coeffs(8));
            const Element v(t, rng.next_coeffs(8));
            push(t->id(), verify_leibniz(derivation(u, v), 1000, opts.seed, ltol));
        }
    }
    if (all || suite == "group") {
        push("", automorphism_group_check());
    }
    if (out["reports"].empty()) {
        std::cerr << "unknown suite `" << suite
                  << "` (expected: all, pauli, lorentz, rassoc, spin, fourtuple, derivations, leibniz, group)\n";
        return kExitUsage;
    }
    out["passed"] = all_passed;
    emit(opts, out);
    return all_passed ? kExitPass : kExitCheckFailed;
}

int cmd_solve(const GlobalOpts& opts, const std::string& config_path) {
    std::ifstream f(config_path);
    if (!f) {
        std::cerr << "cannot open config " << config_path << "\n";
        return kExitUsage;
    }
    const json j = json::parse(f);
    const SolveConfig cfg = parse_solve_config(j);

    std::optional<EigenResult> res;
    if (cfg.mode == "complex") {
        res = complex_solution(cfg.table, cfg.fields, cfg.particle, cfg.grid);
    } else if (cfg.mode == "local") {
        res = local_solution(cfg.specs, cfg.pole, cfg.grid);
    } else {
        res = octonion_solution(*cfg.u, *cfg.v, cfg.specs, cfg.pole, cfg.grid,
                                cfg.bracketing ? &*cfg.bracketing : nullptr);
    }
    ordered_json out = eigen_result_json(*res, cfg.table->id());
    out["seed"] = opts.seed;
    emit(opts, out);
    return kExitPass;
}

int cmd_invariance(const GlobalOpts& opts, const std::string& config_path) {
    std::ifstream f(config_path);
    if (!f) {
        std::cerr << "cannot open config " << config_path << "\n";
        return kExitUsage;
    }
    const json j = json::parse(f);
    InvarianceConfig cfg = parse_invariance_config(j);
    if (opts.tolerance > 0.0) cfg.lambda_tol = opts.tolerance;
    const auto& tables = canonical_catalog().tables;

    InvarianceReport report;
    if (cfg.phi) {
        GridSpec xg{.points = 11, .h = cfg.grid.h};
        GridSpec yg{.points = 11};
        report = orthogonal_extension_check(cfg.poly, *cfg.phi, cfg.op, tables, xg, yg,
                                            cfg.lambda_tol);
    } else {
        report = invariance_check(cfg.poly, cfg.op, tables, cfg.grid, cfg.lambda_tol,
                                  cfg.residual_tol);
    }
    ordered_json out = invariance_report_json(report, j["poly"], j["operator"]);
    out["seed"] = opts.seed;
    emit(opts, out);
    return report.invariant ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composition-algebra enumeration and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_option("--out", opts.out, "output path (directory for enumerate, file otherwise)");
    app.add_option("--seed", opts.seed, "seed for random sampling");
    app.add_option("--tolerance", opts.tolerance, "override the per-suite residual tolerance");

    auto* enumerate = app.add_subcommand("enumerate", "write the sixteen algebra tables and a summary");
    bool with_candidates = false;
    enumerate->add_flag("--candidates", with_candidates, "also dump all 128 parity candidates");

    auto* verify = app.add_subcommand("verify", "run identity suites");
    std::string suite = "all";
    std::string table_id;
    verify->add_option("--suite", suite,
                       "all, pauli, lorentz, rassoc, spin, fourtuple, derivations, leibniz, group");
    verify->add_option("--table", table_id, "restrict to one table id (O0..O15) or codec file");

    auto* solve = app.add_subcommand("solve", "solve one eigen configuration");
    std::string solve_config;
    solve->add_option("--config", solve_config, "config JSON path")->required();

    auto* invariance = app.add_subcommand("invariance", "eigenvalue invariance across the sixteen algebras");
    std::string invariance_config;
    invariance->add_option("--config", invariance_config, "config JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(opts, with_candidates, opts.out);
        if (verify->parsed()) return cmd_verify(opts, suite, table_id);
        if (solve->parsed()) return cmd_solve(opts, solve_config);
        if (invariance->parsed()) return cmd_invariance(opts, invariance_config);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
