#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "octlab/invariance.hpp"
#include "octlab/transforms.hpp"

namespace octlab {

// Parsed `solve` configuration. The mode is named in "case" or inferred:
// a "particle" block selects the field-sum solution, a "derivation" block
// the derived-axis solution, otherwise the same-pole merge.
struct SolveConfig {
    TablePtr table;
    std::string mode;  // "complex" | "local" | "octonion"
    std::vector<std::pair<double, double>> fields;
    ParticleSpec particle;
    std::vector<AxisSpec> specs;
    double pole = 0.0;
    std::optional<Element> u, v;
    std::optional<BracketTree> bracketing;
    GridSpec grid;
};

struct InvarianceConfig {
    PolySpec poly;
    OperatorSpec op;
    std::optional<PolySpec> phi;  // present: orthogonal-extension mode
    GridSpec grid;
    double lambda_tol = 1e-9;
    double residual_tol = 1e-6;
};

// Throws std::invalid_argument with a line/field description on bad input.
SolveConfig parse_solve_config(const nlohmann::json& j);
InvarianceConfig parse_invariance_config(const nlohmann::json& j);

TablePtr parse_table_field(const nlohmann::json& j);
BracketTree parse_bracketing(const nlohmann::json& j, int factor_count);

nlohmann::ordered_json eigen_result_json(const EigenResult& r, const std::string& table_id);
nlohmann::ordered_json invariance_report_json(const InvarianceReport& r,
                                              const nlohmann::json& echo_poly,
                                              const nlohmann::json& echo_operator);

}  // namespace octlab
