#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace octlab {

// Structured pass/fail record for one verified identity.
struct Failure {
    std::vector<int> indices;
    std::string lhs;
    std::string rhs;
    double residual = 0.0;
};

struct VerificationReport {
    std::string identity;
    int total_cases = 0;
    std::vector<Failure> failures;
    std::map<std::string, std::complex<double>> convention_factors;
    std::vector<std::string> warnings;
    std::map<std::string, double> metrics;
    std::map<std::string, long> case_counts;

    bool passed() const { return failures.empty(); }
    void fail(std::vector<int> indices, std::string lhs, std::string rhs, double residual);

    nlohmann::ordered_json to_json() const;
};

}  // namespace octlab
