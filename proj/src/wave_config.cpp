#include "octlab/wave_config.hpp"

#include <numbers>
#include <stdexcept>

#include "octlab/catalog.hpp"

namespace octlab {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& why) {
    throw std::invalid_argument("config field `" + field + "`: " + why);
}

double number_at(const json& j, const std::string& field, std::optional<double> fallback = {}) {
    if (!j.contains(field)) {
        if (fallback) return *fallback;
        bad(field, "missing");
    }
    if (!j[field].is_number()) bad(field, "expected a number");
    return j[field].get<double>();
}

std::array<double, 8> coeffs_at(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_array()) bad(field, "expected an array of coefficients");
    const auto& arr = j[field];
    if (arr.size() > 8) bad(field, "at most 8 coefficients");
    std::array<double, 8> c{};
    for (std::size_t k = 0; k < arr.size(); ++k) {
        if (!arr[k].is_number()) bad(field, "coefficients must be numbers");
        c[k] = arr[k].get<double>();
    }
    return c;
}

GridSpec parse_grid(const json& j, double default_h) {
    GridSpec g;
    g.h = default_h;
    if (!j.contains("grid")) return g;
    const auto& gj = j["grid"];
    if (gj.contains("h")) g.h = number_at(gj, "h");
    if (gj.contains("points")) g.points = static_cast<int>(number_at(gj, "points"));
    if (gj.contains("half_width")) g.half_width = number_at(gj, "half_width");
    if (gj.contains("center")) g.center = number_at(gj, "center");
    if (gj.contains("pole_exclusion")) g.pole_exclusion = number_at(gj, "pole_exclusion");
    return g;
}

int parse_sign(const json& j) {
    if (!j.contains("sign")) return +1;
    if (j["sign"].is_string()) {
        const auto s = j["sign"].get<std::string>();
        if (s == "+") return +1;
        if (s == "-") return -1;
        bad("particle.sign", "expected \"+\" or \"-\"");
    }
    const int s = j["sign"].get<int>();
    if (s != 1 && s != -1) bad("particle.sign", "expected +1 or -1");
    return s;
}

}  // namespace

TablePtr parse_table_field(const json& j) {
    if (!j.contains("table")) bad("table", "missing");
    const auto& tj = j["table"];
    if (tj.is_string()) {
        return table_by_id(tj.get<std::string>());
    }
    if (!tj.is_object()) bad("table", "expected an id string or an inline table object");
    const int dim = static_cast<int>(number_at(tj, "dim"));
    const std::string id = tj.value("id", std::string("inline"));
    std::vector<SignedTriplet> triplets;
    if (tj.contains("triplets")) {
        for (const auto& row : tj["triplets"]) {
            if (!row.is_array() || row.size() != 4) {
                bad("table.triplets", "each entry is [mu, nu, rho, sign]");
            }
            triplets.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                                row[3].get<int>()});
        }
    }
    return StructureTable::make(dim, id, std::move(triplets));
}

BracketTree parse_bracketing(const json& j, int factor_count) {
    BracketTree tree;
    // Nested lists of factor indices, e.g. [[0,1],2].
    auto build = [&](auto&& self, const json& node) -> int {
        if (node.is_number_integer()) {
            tree.nodes.push_back({node.get<int>(), -1, -1});
            return static_cast<int>(tree.nodes.size()) - 1;
        }
        if (!node.is_array() || node.size() != 2) {
            bad("bracketing", "nodes are factor indices or pairs");
        }
        const int l = self(self, node[0]);
        const int r = self(self, node[1]);
        tree.nodes.push_back({-1, l, r});
        return static_cast<int>(tree.nodes.size()) - 1;
    };
    tree.root = build(build, j);
    tree.validate(factor_count);
    return tree;
}

namespace {

// d of one passive factor: slope of the exponent per unit (x - a).
double passive_slope(double t, int branch) {
    return t * (std::numbers::pi / 2 + 2.0 * std::numbers::pi * branch);
}

}  // namespace

SolveConfig parse_solve_config(const json& j) {
    SolveConfig cfg;
    cfg.table = parse_table_field(j);

    cfg.mode = j.value("case", std::string());
    if (cfg.mode.empty()) {
        cfg.mode = j.contains("particle") ? "complex" : j.contains("derivation") ? "octonion" : "local";
    }
    if (cfg.mode != "complex" && cfg.mode != "local" && cfg.mode != "octonion") {
        bad("case", "expected complex, local or octonion");
    }

    if (!j.contains("factors") || !j["factors"].is_array()) bad("factors", "missing array");
    bool pole_set = false;
    for (const auto& fj : j["factors"]) {
        const std::string kind = fj.value("kind", std::string("passive"));
        const double t = number_at(fj, "t");
        const double a = number_at(fj, "a", 0.0);
        const int branch = static_cast<int>(number_at(fj, "N", 0.0));
        if (cfg.mode == "complex") {
            if (kind != "active") bad("factors.kind", "complex case takes active field factors");
            cfg.fields.emplace_back(t, a);
            continue;
        }
        if (kind != "passive") bad("factors.kind", "merge cases take passive factors");
        Element theta(cfg.table, coeffs_at(fj, "theta"));
        cfg.specs.push_back({std::move(theta), passive_slope(t, branch)});
        if (pole_set && a != cfg.pole) bad("factors.a", "merge factors must share one pole");
        cfg.pole = a;
        pole_set = true;
    }

    if (cfg.mode == "complex") {
        if (!j.contains("particle")) bad("particle", "missing");
        const auto& pj = j["particle"];
        cfg.particle.t = number_at(pj, "t");
        cfg.particle.m = static_cast<int>(number_at(pj, "M", 0.0));
        cfg.particle.sign = parse_sign(pj);
    }
    if (cfg.mode == "octonion") {
        if (!j.contains("derivation")) bad("derivation", "missing");
        const auto& dj = j["derivation"];
        cfg.u = Element(cfg.table, coeffs_at(dj, "u"));
        cfg.v = Element(cfg.table, coeffs_at(dj, "v"));
    }
    if (j.contains("bracketing")) {
        cfg.bracketing = parse_bracketing(j["bracketing"], static_cast<int>(j["factors"].size()));
    }
    cfg.grid = parse_grid(j, cfg.mode == "complex" ? 1e-4 : 1e-5);
    return cfg;
}

namespace {

PolySpec parse_poly(const json& j, const std::string& name) {
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty()) {
        bad(name + ".factors", "missing array");
    }
    PolySpec p;
    for (const auto& fj : j["factors"]) {
        PolyFactor f;
        const std::string kind = fj.value("kind", std::string("passive"));
        if (kind == "active") {
            f.kind = FactorKind::Active;
        } else if (kind == "passive") {
            f.kind = FactorKind::Passive;
        } else if (kind == "constant") {
            f.kind = FactorKind::Constant;
        } else {
            bad(name + ".factors.kind", "expected active, passive or constant");
        }
        f.axis = coeffs_at(fj, "theta");
        if (f.kind != FactorKind::Constant) {
            f.t = number_at(fj, "t");
            f.a = number_at(fj, "a", 0.0);
            f.branch = static_cast<int>(number_at(fj, "N", 0.0));
        }
        p.factors.push_back(f);
    }
    if (j.contains("bracketing")) {
        p.bracketing = parse_bracketing(j["bracketing"], static_cast<int>(p.factors.size()));
    }
    return p;
}

}  // namespace

InvarianceConfig parse_invariance_config(const json& j) {
    InvarianceConfig cfg;
    if (!j.contains("poly")) bad("poly", "missing");
    cfg.poly = parse_poly(j["poly"], "poly");
    if (!j.contains("operator")) bad("operator", "missing");
    const auto& oj = j["operator"];
    cfg.op.axis = coeffs_at(oj, "axis");
    if (oj.contains("fields")) {
        for (const auto& fj : oj["fields"]) {
            cfg.op.fields.emplace_back(number_at(fj, "t"), number_at(fj, "a"));
        }
    }
    if (j.contains("phi")) {
        cfg.phi = parse_poly(j["phi"], "phi");
    }
    cfg.grid = parse_grid(j, 1e-5);
    if (j.contains("lambda_tol")) cfg.lambda_tol = number_at(j, "lambda_tol");
    if (j.contains("residual_tol")) cfg.residual_tol = number_at(j, "residual_tol");
    return cfg;
}

nlohmann::ordered_json eigen_result_json(const EigenResult& r, const std::string& table_id) {
    nlohmann::ordered_json j;
    j["table"] = table_id;
    j["theta_tilde"] = std::vector<double>(r.theta_tilde.coeffs().begin(),
                                           r.theta_tilde.coeffs().begin() + r.theta_tilde.dim());
    j["d_tilde"] = r.d_tilde;
    j["residual_analytic"] = r.residual_analytic;
    j["residual_fd"] = r.residual_fd;
    j["symmetry_class"] = to_string(r.symmetry_class);
    j["degenerate"] = r.degenerate;
    j["reconstruction_residual"] = r.reconstruction_residual;
    j["axis_in_derivation_image"] = r.axis_in_derivation_image;
    j["axis_image_residual"] = r.axis_image_residual;
    j["su3_stabilized"] = r.su3_stabilized;
    return j;
}

nlohmann::ordered_json invariance_report_json(const InvarianceReport& r,
                                              const nlohmann::json& echo_poly,
                                              const nlohmann::json& echo_operator) {
    nlohmann::ordered_json j;
    j["poly"] = echo_poly;
    j["operator"] = echo_operator;
    j["lambdas"] = r.lambdas;
    j["residuals"] = r.residuals;
    j["invariant"] = r.invariant;
    j["witness"] = r.witness;
    j["lambda_spread"] = r.lambda_spread;
    j["bracket_residual"] = r.bracket_residual;
    return j;
}

}  // namespace octlab
