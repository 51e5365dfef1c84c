#include "octlab/report.hpp"

namespace octlab {

void VerificationReport::fail(std::vector<int> indices, std::string lhs, std::string rhs,
                              double residual) {
    failures.push_back({std::move(indices), std::move(lhs), std::move(rhs), residual});
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["total_cases"] = total_cases;
    j["passed"] = passed();
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        j["failures"].push_back({{"indices", f.indices},
                                 {"lhs", f.lhs},
                                 {"rhs", f.rhs},
                                 {"residual", f.residual}});
    }
    j["convention_factors"] = nlohmann::ordered_json::object();
    for (const auto& [name, z] : convention_factors) {
        if (z.imag() == 0.0) {
            j["convention_factors"][name] = z.real();
        } else {
            j["convention_factors"][name] = {{"re", z.real()}, {"im", z.imag()}};
        }
    }
    if (!warnings.empty()) j["warnings"] = warnings;
    if (!metrics.empty()) j["metrics"] = metrics;
    if (!case_counts.empty()) j["case_counts"] = case_counts;
    return j;
}

}  // namespace octlab
