#include "octlab/derivations.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "octlab/rng.hpp"

namespace octlab {

namespace {

std::vector<DerivationMap> basis_pair_maps(const TablePtr& table) {
    std::vector<DerivationMap> maps;
    maps.reserve(21);
    for (int i = 1; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            maps.push_back(derivation(Element::basis(table, i), Element::basis(table, j)));
        }
    }
    return maps;
}

Eigen::MatrixXd stacked_generators(const TablePtr& table) {
    const auto maps = basis_pair_maps(table);
    Eigen::MatrixXd g(64, static_cast<Eigen::Index>(maps.size()));
    for (std::size_t n = 0; n < maps.size(); ++n) {
        g.col(static_cast<Eigen::Index>(n)) =
            Eigen::Map<const Eigen::VectorXd>(maps[n].mat.data(), 64);
    }
    return g;
}

}  // namespace

Element DerivationMap::apply(const Element& a) const {
    if (!same_table(*table, *a.table())) {
        throw std::invalid_argument("table mismatch");
    }
    Eigen::Map<const Eigen::Matrix<double, 8, 1>> in(a.coeffs().data());
    const Eigen::Matrix<double, 8, 1> out = mat * in;
    std::array<double, 8> c{};
    for (int k = 0; k < 8; ++k) c[static_cast<std::size_t>(k)] = out[k];
    return Element(a.table(), c);
}

DerivationMap derivation(const Element& u, const Element& v) {
    if (!same_table(*u.table(), *v.table())) {
        throw std::invalid_argument("table mismatch");
    }
    if (u.dim() != 8) {
        throw std::invalid_argument("non-octonion table");
    }
    DerivationMap d;
    d.table = u.table();
    const Element uv = u * v;
    const Element comm_uv = commutator(u, v);
    for (int k = 0; k < 8; ++k) {
        const Element a = Element::basis(u.table(), k);
        const Element col = commutator(comm_uv, a) - 3.0 * ((uv * a) - u * (v * a));
        for (int r = 0; r < 8; ++r) d.mat(r, k) = col.coeff(r);
    }
    return d;
}

VerificationReport verify_leibniz(const DerivationMap& d, int samples, std::uint64_t seed,
                                  double tol, kernels::Exec mode) {
    VerificationReport report;
    report.identity = "derivation product rule";
    report.total_cases = samples;
    report.metrics["seed"] = static_cast<double>(seed);

    Rng rng(seed);
    std::vector<std::array<double, 16>> pairs(static_cast<std::size_t>(samples));
    for (auto& p : pairs) {
        for (auto& v : p) v = rng.next_symmetric();
    }

    std::vector<double> residuals(static_cast<std::size_t>(samples));
    auto resid_at = [&](int n) {
        std::array<double, 8> ca{}, cb{};
        for (int k = 0; k < 8; ++k) {
            ca[static_cast<std::size_t>(k)] = pairs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            cb[static_cast<std::size_t>(k)] = pairs[static_cast<std::size_t>(n)][static_cast<std::size_t>(8 + k)];
        }
        const Element a(d.table, ca), b(d.table, cb);
        return (d.apply(a * b) - d.apply(a) * b - a * d.apply(b)).max_abs();
    };
    kernels::fill_over_indices(samples, resid_at, residuals, mode);
    for (int n = 0; n < samples; ++n) {
        if (residuals[static_cast<std::size_t>(n)] > tol) {
            report.fail({n}, "map of product", "product-rule expansion",
                        residuals[static_cast<std::size_t>(n)]);
        }
    }
    report.metrics["max_residual"] =
        residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
    return report;
}

Eigen::MatrixXd derivation_span_basis(const TablePtr& table) {
    const Eigen::MatrixXd g = stacked_generators(table);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(g, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index n = 0; n < sv.size(); ++n) {
        if (sv[n] > kRankCutoff * sv[0]) ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

int derivation_space_dimension(const TablePtr& table) {
    return static_cast<int>(derivation_span_basis(table).cols());
}

int stabilizer_dimension(const TablePtr& table, int k) {
    if (k < 1 || k > 7) {
        throw std::invalid_argument("imaginary basis index out of range 1..7");
    }
    const Eigen::MatrixXd span = derivation_span_basis(table);
    const Eigen::Index dim = span.cols();
    // Action of each span basis map on i_k; stabilizer = null space.
    Eigen::MatrixXd action(8, dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        const Eigen::Map<const Eigen::Matrix<double, 8, 8>> m(span.col(n).data());
        action.col(n) = m.col(k);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(action);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index n = 0; n < sv.size(); ++n) {
        if (sv[n] > kRankCutoff * sv[0]) ++rank;
    }
    return static_cast<int>(dim) - rank;
}

double lie_closure_residual(const TablePtr& table) {
    const auto maps = basis_pair_maps(table);
    const Eigen::MatrixXd g = stacked_generators(table);
    const auto qr = g.colPivHouseholderQr();
    double worst = 0.0;
    for (std::size_t a = 0; a < maps.size(); ++a) {
        for (std::size_t b = a + 1; b < maps.size(); ++b) {
            const Eigen::Matrix<double, 8, 8> comm =
                maps[a].mat * maps[b].mat - maps[b].mat * maps[a].mat;
            const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(comm.data(), 64);
            const Eigen::VectorXd sol = qr.solve(rhs);
            worst = std::max(worst, (g * sol - rhs).norm());
        }
    }
    return worst;
}

DerivationFingerprint derivation_fingerprint(const TablePtr& table) {
    DerivationFingerprint fp;
    fp.table_id = table->id();
    fp.der_dim = derivation_space_dimension(table);
    for (int k = 1; k <= 7; ++k) {
        fp.stabilizer_dims[static_cast<std::size_t>(k - 1)] = stabilizer_dimension(table, k);
    }
    fp.closure_residual = lie_closure_residual(table);
    return fp;
}

int common_stabilized_units(const std::vector<DerivationMap>& maps) {
    if (maps.empty()) return 0;
    // Stack the imaginary blocks; common kernel = null space of the stack.
    Eigen::MatrixXd stack(static_cast<Eigen::Index>(7 * maps.size()), 7);
    for (std::size_t n = 0; n < maps.size(); ++n) {
        stack.block(static_cast<Eigen::Index>(7 * n), 0, 7, 7) = maps[n].mat.block(1, 1, 7, 7);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return 7;
    int rank = 0;
    for (Eigen::Index n = 0; n < sv.size(); ++n) {
        if (sv[n] > kRankCutoff * sv[0]) ++rank;
    }
    return 7 - rank;
}

}  // namespace octlab
