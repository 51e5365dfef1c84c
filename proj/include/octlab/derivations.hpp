#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "octlab/element.hpp"
#include "octlab/kernels.hpp"
#include "octlab/report.hpp"

namespace octlab {

// Linear map on coefficient vectors built from a pair (u, v) via
//   a -> [[u,v],a] - 3((uv)a - u(va)).
// Kills the unit and maps the imaginary subspace to itself.
struct DerivationMap {
    Eigen::Matrix<double, 8, 8> mat = Eigen::Matrix<double, 8, 8>::Zero();
    TablePtr table;

    Element apply(const Element& a) const;
};

DerivationMap derivation(const Element& u, const Element& v);

VerificationReport verify_leibniz(const DerivationMap& d, int samples, std::uint64_t seed,
                                  double tol = 1e-10,
                                  kernels::Exec mode = kernels::Exec::Parallel);

// Relative singular-value cutoff used for every rank decision here.
constexpr double kRankCutoff = 1e-9;

// Orthonormal basis (columns) of the span of the 21 basis-pair maps,
// viewed as 64-vectors.
Eigen::MatrixXd derivation_span_basis(const TablePtr& table);

int derivation_space_dimension(const TablePtr& table);

// Dimension of {D in the span : D(i_k) = 0}.
int stabilizer_dimension(const TablePtr& table, int k);

// Largest least-squares residual of commutators of basis-pair maps
// against the span.
double lie_closure_residual(const TablePtr& table);

// Whether some unit imaginary element is annihilated by every map in the
// list; returns the common kernel dimension restricted to the imaginary
// block (0 when the list is empty).
int common_stabilized_units(const std::vector<DerivationMap>& maps);

struct DerivationFingerprint {
    std::string table_id;
    int der_dim = 0;
    std::array<int, 7> stabilizer_dims{};  // index k-1 holds the i_k result
    double closure_residual = 0.0;
};

DerivationFingerprint derivation_fingerprint(const TablePtr& table);

}  // namespace octlab
