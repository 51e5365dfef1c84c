#pragma once

#include <array>
#include <vector>

#include "octlab/catalog.hpp"
#include "octlab/transforms.hpp"

namespace octlab {

// A wave written over basis symbols i1..i7 with the algebra left open;
// binding it to a table yields an evaluable function of x.
enum class FactorKind { Active, Passive, Constant };

struct PolyFactor {
    FactorKind kind = FactorKind::Passive;
    std::array<double, 8> axis{};  // axis[0] must stay 0
    double t = 0.0;
    double a = 0.0;
    int branch = 0;
};

struct PolySpec {
    std::vector<PolyFactor> factors;
    BracketTree bracketing;  // empty: left fold
};

// D = -axis * d/dx - sum_i t_i/(x - a_i), axis bound per algebra.
struct OperatorSpec {
    std::array<double, 8> axis{};
    std::vector<std::pair<double, double>> fields;
};

// PolySpec bound to one concrete algebra.
class BoundWave {
  public:
    BoundWave(TablePtr table, const PolySpec& spec);

    const TablePtr& table() const { return table_; }
    Element value(double x) const;

  private:
    TablePtr table_;
    std::vector<PolyFactor> factors_;
    BracketTree bracketing_;
};

BoundWave instantiate(const PolySpec& p, const TablePtr& table);

// Binding by index into the canonical sixteen-member catalog.
BoundWave instantiate(const PolySpec& p, int n);

struct InvarianceReport {
    std::vector<double> lambdas;    // eigenvalue extracted per algebra
    std::vector<double> residuals;  // eigen residual per algebra
    bool invariant = false;
    int witness = -1;  // first diverging algebra index, -1 when invariant
    double lambda_spread = 0.0;
    double bracket_residual = 0.0;  // orthogonal check only
};

// Evaluates the operator relation in every listed algebra against the
// index-0 wave and checks the extracted real eigenvalue for invariance.
InvarianceReport invariance_check(const PolySpec& p, const OperatorSpec& op,
                                  const std::vector<TablePtr>& tables, GridSpec grid = {},
                                  double lambda_tol = 1e-9, double residual_tol = 1e-6);

// The same relation with an extra factor phi(y) along an independent
// axis: D_x (psi phi) = lambda (psi phi) on a 2-D grid, with the operator
// acting on the psi factor only, plus a bracketing-independence check.
InvarianceReport orthogonal_extension_check(const PolySpec& psi, const PolySpec& phi,
                                            const OperatorSpec& op,
                                            const std::vector<TablePtr>& tables,
                                            GridSpec x_grid = {.points = 11},
                                            GridSpec y_grid = {.points = 11},
                                            double lambda_tol = 1e-9, double residual_tol = 1e-8,
                                            double bracket_tol = 1e-10);

}  // namespace octlab
