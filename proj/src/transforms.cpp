#include "octlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "octlab/derivations.hpp"
#include "octlab/kernels.hpp"

namespace octlab {

namespace {

constexpr double kAxisTol = 1e-12;

void require_unit_imaginary(const Element& theta) {
    if (std::abs(theta.real_part()) > kAxisTol || std::abs(norm(theta) - 1.0) > kAxisTol) {
        throw std::invalid_argument("axis must be a unit imaginary element");
    }
}

double passive_phase(double t, int branch) {
    return t * (std::numbers::pi / 2 + 2.0 * std::numbers::pi * branch);
}

std::vector<double> grid_points(const GridSpec& grid, std::span<const double> poles) {
    if (grid.points < 2) {
        throw std::invalid_argument("grid needs at least two points");
    }
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(grid.points));
    const double step = 2.0 * grid.half_width / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) {
        const double x = grid.center - grid.half_width + step * i;
        const bool excluded = std::any_of(poles.begin(), poles.end(), [&](double p) {
            return std::abs(x - p) < grid.pole_exclusion;
        });
        if (excluded) continue;
        for (double probe : {x - grid.h, x, x + grid.h}) {
            if (std::any_of(poles.begin(), poles.end(), [&](double p) { return probe == p; })) {
                throw std::domain_error("pole on grid");
            }
        }
        xs.push_back(x);
    }
    if (xs.empty()) {
        throw std::domain_error("pole on grid");
    }
    return xs;
}

}  // namespace

TransformSpec::TransformSpec(TransformKind kind_, Element theta_, double t_, double a_, int branch_)
    : kind(kind_), theta(std::move(theta_)), t(t_), a(a_), branch(branch_) {
    require_unit_imaginary(theta);
}

Element eval_transform(const TransformSpec& s, double x) {
    if (s.kind == TransformKind::Active) {
        if (x == s.a) {
            throw std::domain_error("pole");
        }
        return exp_elem((s.t * std::log(std::abs(x - s.a))) * s.theta);
    }
    return exp_elem((passive_phase(s.t, s.branch) * (x - s.a)) * s.theta);
}

double duality_match(double t_p, double x, double a, int branch) {
    if (x == a) {
        throw std::domain_error("pole");
    }
    const double lg = std::log(std::abs(x - a));
    if (lg == 0.0) {
        throw std::domain_error("logarithm zero");
    }
    return t_p * (x - a) / lg * (std::numbers::pi / 2 + 2.0 * std::numbers::pi * branch);
}

BracketTree BracketTree::left_fold(int count) {
    BracketTree t;
    if (count <= 0) {
        throw std::invalid_argument("bracketing needs at least one factor");
    }
    t.nodes.push_back({0, -1, -1});
    int prev = 0;
    for (int i = 1; i < count; ++i) {
        t.nodes.push_back({i, -1, -1});
        const int leaf = static_cast<int>(t.nodes.size()) - 1;
        t.nodes.push_back({-1, prev, leaf});
        prev = static_cast<int>(t.nodes.size()) - 1;
    }
    t.root = prev;
    return t;
}

void BracketTree::validate(int count) const {
    std::vector<int> seen(static_cast<std::size_t>(count), 0);
    if (root < 0 || root >= static_cast<int>(nodes.size())) {
        throw std::invalid_argument("bracketing tree has no root");
    }
    std::vector<int> stack = {root};
    int visited = 0;
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        if (++visited > static_cast<int>(nodes.size())) {
            throw std::invalid_argument("bracketing tree is cyclic");
        }
        const Node& n = nodes[static_cast<std::size_t>(at)];
        if (n.leaf >= 0) {
            if (n.leaf >= count) {
                throw std::invalid_argument("bracketing leaf out of range");
            }
            seen[static_cast<std::size_t>(n.leaf)]++;
            continue;
        }
        if (n.left < 0 || n.right < 0 || n.left >= static_cast<int>(nodes.size()) ||
            n.right >= static_cast<int>(nodes.size())) {
            throw std::invalid_argument("bracketing node has missing children");
        }
        stack.push_back(n.left);
        stack.push_back(n.right);
    }
    for (int c : seen) {
        if (c != 1) {
            throw std::invalid_argument("bracketing must use every factor exactly once");
        }
    }
}

namespace {

Element eval_node(const BracketTree& t, int at, std::span<const Element> leaves) {
    const BracketTree::Node& n = t.nodes[static_cast<std::size_t>(at)];
    if (n.leaf >= 0) return leaves[static_cast<std::size_t>(n.leaf)];
    return eval_node(t, n.left, leaves) * eval_node(t, n.right, leaves);
}

}  // namespace

Element eval_wave(const WaveSpec& w, double x) {
    if (w.factors.empty()) {
        throw std::invalid_argument("wave needs at least one factor");
    }
    w.bracketing.validate(static_cast<int>(w.factors.size()));
    std::vector<Element> leaves;
    leaves.reserve(w.factors.size());
    for (const auto& f : w.factors) leaves.push_back(eval_transform(f, x));
    return eval_node(w.bracketing, w.bracketing.root, leaves);
}

bool complex_confined(const WaveSpec& w, std::span<const double> xs, double tol, Element* axis) {
    Element detected = Element::zero(w.table);
    bool have_axis = false;
    for (double x : xs) {
        const Element v = eval_wave(w, x).imaginary_part();
        const double n = norm(v);
        if (n <= tol) continue;
        if (!have_axis) {
            detected = (1.0 / n) * v;
            have_axis = true;
            continue;
        }
        double dot = 0.0;
        for (int k = 0; k < w.table->dim(); ++k) dot += v.coeff(k) * detected.coeff(k);
        if ((v - dot * detected).max_abs() > tol) {
            return false;
        }
    }
    if (axis && have_axis) *axis = detected;
    return true;
}

const char* to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::U1: return "U1";
        case SymmetryClass::SU2: return "SU2";
        case SymmetryClass::G2Type: return "G2-type";
    }
    return "?";
}

SymmetryClass classify_axes(std::span<const AxisSpec> specs, double tol) {
    if (specs.empty()) return SymmetryClass::U1;
    bool all_colinear = true;
    for (const auto& s : specs) {
        const double dot = [&] {
            double acc = 0.0;
            for (int k = 0; k < s.theta.dim(); ++k) acc += s.theta.coeff(k) * specs[0].theta.coeff(k);
            return acc;
        }();
        if ((s.theta - dot * specs[0].theta).max_abs() > tol) {
            all_colinear = false;
            break;
        }
    }
    if (all_colinear) return SymmetryClass::U1;
    for (const auto& a : specs) {
        for (const auto& b : specs) {
            for (const auto& c : specs) {
                if (associator(a.theta, b.theta, c.theta).max_abs() > tol) {
                    return SymmetryClass::G2Type;
                }
            }
        }
    }
    return SymmetryClass::SU2;
}

namespace {

struct ComplexWave {
    Element theta;
    double m = 0.0;
    std::vector<std::pair<double, double>> fields;
    double phase = 0.0;

    Element value(double x) const {
        double arg = m * x + phase;
        for (const auto& [t, a] : fields) arg += t * std::log(std::abs(x - a));
        return exp_elem(arg * theta);
    }
    double field_sum(double x) const {
        double s = 0.0;
        for (const auto& [t, a] : fields) s += t / (x - a);
        return s;
    }
};

EigenResult complex_solution_impl(const TablePtr& table,
                                  const std::vector<std::pair<double, double>>& fields,
                                  const ParticleSpec& particle, const GridSpec& grid, double phase) {
    if (particle.sign != 1 && particle.sign != -1) {
        throw std::invalid_argument("particle sign must be +1 or -1");
    }
    if (particle.m < 0) {
        throw std::invalid_argument("particle branch count must be >= 0");
    }
    ComplexWave wave{Element::basis(table, 1),
                     std::numbers::pi * particle.t * (0.5 + 2.0 * particle.m * particle.sign),
                     fields, phase};

    std::vector<double> poles;
    for (const auto& [t, a] : fields) poles.push_back(a);
    const auto xs = grid_points(grid, poles);

    EigenResult res(wave.theta);
    res.d_tilde = wave.m;
    res.symmetry_class = SymmetryClass::U1;

    auto analytic_at = [&](int i) {
        const double x = xs[static_cast<std::size_t>(i)];
        const Element psi = wave.value(x);
        const double s = wave.field_sum(x);
        // psi' = theta (m + s) psi, exact up to rounding
        const Element dpsi = (wave.m + s) * (wave.theta * psi);
        const Element op = -(wave.theta * dpsi) - s * psi;
        return norm(op - wave.m * psi);
    };
    auto fd_at = [&](int i) {
        const double x = xs[static_cast<std::size_t>(i)];
        const Element psi = wave.value(x);
        const Element diff = (1.0 / (2.0 * grid.h)) * (wave.value(x + grid.h) - wave.value(x - grid.h));
        const Element op = -(wave.theta * diff) - wave.field_sum(x) * psi;
        return norm(op - wave.m * psi);
    };
    const int n = static_cast<int>(xs.size());
    res.residual_analytic = kernels::max_over_indices(n, analytic_at, kernels::Exec::Parallel);
    res.residual_fd = kernels::max_over_indices(n, fd_at, kernels::Exec::Parallel);
    return res;
}

}  // namespace

EigenResult complex_solution(const TablePtr& table, const std::vector<std::pair<double, double>>& fields,
                             const ParticleSpec& particle, GridSpec grid) {
    return complex_solution_impl(table, fields, particle, grid, 0.0);
}

bool global_phase_check(const TablePtr& table, const std::vector<std::pair<double, double>>& fields,
                        const ParticleSpec& particle, double alpha, GridSpec grid, double tol) {
    const EigenResult base = complex_solution_impl(table, fields, particle, grid, 0.0);
    const EigenResult shifted = complex_solution_impl(table, fields, particle, grid, alpha);
    return shifted.d_tilde == base.d_tilde &&
           std::abs(shifted.residual_analytic - base.residual_analytic) <= tol &&
           std::abs(shifted.residual_fd - base.residual_fd) <= tol;
}

MergeResult quaternion_merge(const AxisSpec& s1, const AxisSpec& s2) {
    require_unit_imaginary(s1.theta);
    require_unit_imaginary(s2.theta);
    const Element product = exp_elem(s1.d * s1.theta) * exp_elem(s2.d * s2.theta);
    const Element lg = log_elem(product);  // throws at the -1 branch point
    const double d = norm(lg);
    if (d == 0.0) {
        return {s1.theta, 0.0, true};
    }
    return {(1.0 / d) * lg, d, false};
}

namespace {

// Shared tail of the local/derived solutions: eigen residuals of
// psi = exp(theta d (x-a)) against -theta d/dx.
void fill_axis_residuals(EigenResult& res, double a, const GridSpec& grid) {
    const auto xs = grid_points(grid, {});
    const Element theta = res.theta_tilde;
    const double d = res.d_tilde;
    auto value = [&](double x) { return exp_elem((d * (x - a)) * theta); };
    auto analytic_at = [&](int i) {
        const double x = xs[static_cast<std::size_t>(i)];
        const Element psi = value(x);
        const Element dpsi = d * (theta * psi);
        return norm(-(theta * dpsi) - d * psi);
    };
    auto fd_at = [&](int i) {
        const double x = xs[static_cast<std::size_t>(i)];
        const Element diff = (1.0 / (2.0 * grid.h)) * (value(x + grid.h) - value(x - grid.h));
        return norm(-(theta * diff) - d * value(x));
    };
    const int n = static_cast<int>(xs.size());
    res.residual_analytic = kernels::max_over_indices(n, analytic_at, kernels::Exec::Parallel);
    res.residual_fd = kernels::max_over_indices(n, fd_at, kernels::Exec::Parallel);
}

}  // namespace

EigenResult local_solution(std::span<const AxisSpec> specs, double a, GridSpec grid) {
    if (specs.empty()) {
        throw std::invalid_argument("need at least one factor");
    }
    EigenResult res(specs[0].theta);
    res.symmetry_class = classify_axes(specs);
    if (specs.size() == 1) {
        require_unit_imaginary(specs[0].theta);
        res.d_tilde = specs[0].d;
    } else {
        MergeResult acc{specs[0].theta, specs[0].d, false};
        for (std::size_t i = 1; i < specs.size(); ++i) {
            acc = quaternion_merge({acc.theta, acc.d}, specs[i]);
        }
        res.theta_tilde = acc.theta;
        res.d_tilde = acc.d;
        res.degenerate = acc.collapsed;
    }
    // Reconstruction against the left-to-right factor product.
    Element product = exp_elem(specs[0].d * specs[0].theta);
    for (std::size_t i = 1; i < specs.size(); ++i) {
        product = product * exp_elem(specs[i].d * specs[i].theta);
    }
    res.reconstruction_residual = norm(exp_elem(res.d_tilde * res.theta_tilde) - product);
    fill_axis_residuals(res, a, grid);
    return res;
}

EigenResult octonion_solution(const Element& u, const Element& v, std::span<const AxisSpec> specs,
                              double a, GridSpec grid, const BracketTree* bracketing) {
    if (specs.size() < 3) {
        throw std::invalid_argument("need at least three factors");
    }
    if (u.dim() != 8) {
        throw std::invalid_argument("non-octonion table");
    }
    const DerivationMap dmap = derivation(u, v);

    EigenResult res(specs[0].theta);
    res.symmetry_class = classify_axes(specs);

    std::vector<Element> axes;   // derived, not normalized
    std::vector<double> scales;  // |g_i|
    for (const auto& s : specs) {
        require_unit_imaginary(s.theta);
        const Element g = dmap.apply(s.theta);
        const double n = norm(g);
        if (n <= kAxisTol) {
            res.degenerate = true;
        }
        axes.push_back(g);
        scales.push_back(n);
    }

    std::vector<Element> factors;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        factors.push_back(exp_elem(specs[i].d * axes[i]));
    }
    Element product = Element::scalar(u.table(), 1.0);
    if (bracketing) {
        bracketing->validate(static_cast<int>(factors.size()));
        product = eval_node(*bracketing, bracketing->root, factors);
    } else {
        // ((e1 e2) e3) e4 ...
        product = factors[0];
        for (std::size_t i = 1; i < factors.size(); ++i) product = product * factors[i];
    }
    const Element lg = log_elem(product);
    const double d = norm(lg);
    if (d == 0.0) {
        res.degenerate = true;
        res.theta_tilde = Element::basis(u.table(), 1);
        res.d_tilde = 0.0;
    } else {
        res.theta_tilde = (1.0 / d) * lg;
        res.d_tilde = d;
    }
    res.reconstruction_residual = norm(exp_elem(res.d_tilde * res.theta_tilde) - product);

    // Is the extracted axis expressible as an image of the derivation map?
    {
        Eigen::Map<const Eigen::Matrix<double, 8, 1>> target(res.theta_tilde.coeffs().data());
        const Eigen::Matrix<double, 8, 1> fitted =
            dmap.mat * dmap.mat.colPivHouseholderQr().solve(Eigen::Matrix<double, 8, 1>(target));
        res.axis_image_residual = (fitted - target).norm();
        res.axis_in_derivation_image = res.axis_image_residual <= 1e-9;
    }

    // Sub-case tag: all pairwise derivations of the derived axes leave a
    // common imaginary unit fixed.
    {
        std::vector<DerivationMap> pairwise;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            for (std::size_t j = i + 1; j < axes.size(); ++j) {
                if (scales[i] <= kAxisTol || scales[j] <= kAxisTol) continue;
                pairwise.push_back(derivation(axes[i], axes[j]));
            }
        }
        res.su3_stabilized = !pairwise.empty() && common_stabilized_units(pairwise) > 0;
    }

    fill_axis_residuals(res, a, grid);
    return res;
}

}  // namespace octlab
