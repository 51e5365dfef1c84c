#include "octlab/invariance.hpp"

#include <cmath>
#include <stdexcept>

namespace octlab {

namespace {

// Values from different algebras are compared as points of R^8, so the
// helpers below work on raw coefficients rather than on Elements.
double dot(const Element& a, const Element& b) {
    double acc = 0.0;
    for (int k = 0; k < a.dim(); ++k) acc += a.coeff(k) * b.coeff(k);
    return acc;
}

double coeff_distance(const Element& a, double scale, const Element& b) {
    double acc = 0.0;
    for (int k = 0; k < a.dim(); ++k) {
        const double d = a.coeff(k) - scale * b.coeff(k);
        acc += d * d;
    }
    return std::sqrt(acc);
}

std::vector<double> grid_points(const GridSpec& grid,
                                const std::vector<std::pair<double, double>>& fields) {
    std::vector<double> xs;
    const double step = 2.0 * grid.half_width / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) {
        const double x = grid.center - grid.half_width + step * i;
        bool excluded = false;
        for (const auto& [t, a] : fields) {
            if (std::abs(x - a) < grid.pole_exclusion) excluded = true;
        }
        if (!excluded) xs.push_back(x);
    }
    if (xs.empty()) {
        throw std::domain_error("pole on grid");
    }
    return xs;
}

struct BoundOperator {
    Element axis;
    const std::vector<std::pair<double, double>>& fields;
    double h;

    double field_sum(double x) const {
        double s = 0.0;
        for (const auto& [t, a] : fields) s += t / (x - a);
        return s;
    }
    Element apply(const BoundWave& w, double x) const {
        const Element diff = (1.0 / (2.0 * h)) * (w.value(x + h) - w.value(x - h));
        return -(axis * diff) - field_sum(x) * w.value(x);
    }
};

Element eval_node(const BracketTree& t, int at, const std::vector<Element>& leaves) {
    const BracketTree::Node& n = t.nodes[static_cast<std::size_t>(at)];
    if (n.leaf >= 0) return leaves[static_cast<std::size_t>(n.leaf)];
    return eval_node(t, n.left, leaves) * eval_node(t, n.right, leaves);
}

}  // namespace

BoundWave::BoundWave(TablePtr table, const PolySpec& spec)
    : table_(std::move(table)), factors_(spec.factors), bracketing_(spec.bracketing) {
    if (factors_.empty()) {
        throw std::invalid_argument("wave needs at least one factor");
    }
    for (const auto& f : factors_) {
        if (f.axis[0] != 0.0) {
            throw std::invalid_argument("factor axis must use imaginary basis symbols only");
        }
        for (int k = table_->dim(); k < 8; ++k) {
            if (f.axis[static_cast<std::size_t>(k)] != 0.0) {
                throw std::invalid_argument("factor axis exceeds table dimension");
            }
        }
    }
    if (bracketing_.nodes.empty()) {
        bracketing_ = BracketTree::left_fold(static_cast<int>(factors_.size()));
    } else {
        bracketing_.validate(static_cast<int>(factors_.size()));
    }
}

Element BoundWave::value(double x) const {
    std::vector<Element> leaves;
    leaves.reserve(factors_.size());
    for (const auto& f : factors_) {
        const Element axis(table_, f.axis);
        switch (f.kind) {
            case FactorKind::Constant:
                leaves.push_back(axis);
                break;
            case FactorKind::Active:
                leaves.push_back(eval_transform({TransformKind::Active, axis, f.t, f.a, f.branch}, x));
                break;
            case FactorKind::Passive:
                leaves.push_back(eval_transform({TransformKind::Passive, axis, f.t, f.a, f.branch}, x));
                break;
        }
    }
    return eval_node(bracketing_, bracketing_.root, leaves);
}

BoundWave instantiate(const PolySpec& p, const TablePtr& table) {
    return BoundWave(table, p);
}

BoundWave instantiate(const PolySpec& p, int n) {
    const Catalog& c = canonical_catalog();
    if (n < 0 || n >= c.size()) {
        throw std::invalid_argument("algebra index out of range 0..15");
    }
    return BoundWave(c.tables[static_cast<std::size_t>(n)], p);
}

InvarianceReport invariance_check(const PolySpec& p, const OperatorSpec& op,
                                  const std::vector<TablePtr>& tables, GridSpec grid,
                                  double lambda_tol, double residual_tol) {
    if (tables.empty()) {
        throw std::invalid_argument("need at least one algebra");
    }
    const auto xs = grid_points(grid, op.fields);
    const BoundWave base = instantiate(p, tables[0]);

    InvarianceReport report;
    for (const auto& table : tables) {
        const BoundWave wave = instantiate(p, table);
        const BoundOperator bound{Element(table, op.axis), op.fields, grid.h};

        double num = 0.0, den = 0.0;
        for (double x : xs) {
            const Element dw = bound.apply(wave, x);
            const Element ref = base.value(x);
            num += dot(dw, ref);
            den += dot(ref, ref);
        }
        const double lambda = num / den;
        double resid = 0.0;
        for (double x : xs) {
            const Element dw = bound.apply(wave, x);
            const Element ref = base.value(x);
            resid = std::max(resid, coeff_distance(dw, lambda, ref));
        }
        report.lambdas.push_back(lambda);
        report.residuals.push_back(resid);
    }

    report.invariant = true;
    for (std::size_t n = 0; n < report.lambdas.size(); ++n) {
        const double spread = std::abs(report.lambdas[n] - report.lambdas[0]);
        report.lambda_spread = std::max(report.lambda_spread, spread);
        if (spread > lambda_tol || report.residuals[n] > residual_tol) {
            report.invariant = false;
            if (report.witness < 0) report.witness = static_cast<int>(n);
        }
    }
    return report;
}

InvarianceReport orthogonal_extension_check(const PolySpec& psi, const PolySpec& phi,
                                            const OperatorSpec& op,
                                            const std::vector<TablePtr>& tables, GridSpec x_grid,
                                            GridSpec y_grid, double lambda_tol, double residual_tol,
                                            double bracket_tol) {
    if (tables.empty()) {
        throw std::invalid_argument("need at least one algebra");
    }
    const auto xs = grid_points(x_grid, op.fields);
    const auto ys = grid_points(y_grid, {});

    InvarianceReport report;
    for (const auto& table : tables) {
        const BoundWave wx = instantiate(psi, table);
        const BoundWave wy = instantiate(phi, table);
        const BoundOperator bound{Element(table, op.axis), op.fields, x_grid.h};

        // Eigenvalue from the 1-D relation on psi alone.
        double num = 0.0, den = 0.0;
        for (double x : xs) {
            const Element v = wx.value(x);
            num += dot(bound.apply(wx, x), v);
            den += dot(v, v);
        }
        const double lambda = num / den;

        double resid = 0.0;
        double bracket = 0.0;
        for (double x : xs) {
            const Element dpsi = bound.apply(wx, x);
            const Element psi_x = wx.value(x);
            const Element psi_p = wx.value(x + x_grid.h);
            const Element psi_m = wx.value(x - x_grid.h);
            for (double y : ys) {
                const Element phi_y = wy.value(y);
                const Element route1 = dpsi * phi_y;  // (D psi) phi
                resid = std::max(resid, norm(route1 - lambda * (psi_x * phi_y)));
                // D applied to the product as a function of x
                const Element diff =
                    (1.0 / (2.0 * x_grid.h)) * (psi_p * phi_y - psi_m * phi_y);
                const Element route2 =
                    -(bound.axis * diff) - bound.field_sum(x) * (psi_x * phi_y);
                bracket = std::max(bracket, norm(route1 - route2));
            }
        }
        report.lambdas.push_back(lambda);
        report.residuals.push_back(resid);
        report.bracket_residual = std::max(report.bracket_residual, bracket);
    }

    report.invariant = true;
    for (std::size_t n = 0; n < report.lambdas.size(); ++n) {
        const double spread = std::abs(report.lambdas[n] - report.lambdas[0]);
        report.lambda_spread = std::max(report.lambda_spread, spread);
        if (spread > lambda_tol || report.residuals[n] > residual_tol) {
            report.invariant = false;
            if (report.witness < 0) report.witness = static_cast<int>(n);
        }
    }
    if (report.bracket_residual > bracket_tol) {
        report.invariant = false;
        if (report.witness < 0) report.witness = 0;
    }
    return report;
}

}  // namespace octlab
