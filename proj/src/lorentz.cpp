#include "octlab/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "octlab/catalog.hpp"

namespace octlab {

namespace {

using std::complex;

// complex coefficient of basis axis k
complex<double> coeff_c(const CElement& a, int k) {
    return {a.re().coeff(k), a.im().coeff(k)};
}

// Hermitian projection factor: c with a ~ c*b, via <a,b>/<b,b> over the
// coefficient space.
complex<double> projection_factor(const CElement& a, const CElement& b) {
    complex<double> num = 0.0, den = 0.0;
    for (int k = 0; k < b.table()->dim(); ++k) {
        num += coeff_c(a, k) * std::conj(coeff_c(b, k));
        den += coeff_c(b, k) * std::conj(coeff_c(b, k));
    }
    if (std::abs(den) == 0.0) {
        throw std::domain_error("projection onto zero element");
    }
    return num / den;
}

std::string symbol_of_doubled(const CElement& doubled) {
    const int d = doubled.table()->dim();
    int axis = -1;
    bool imag = false;
    double value = 0.0;
    for (int k = 0; k < d; ++k) {
        const double re = doubled.re().coeff(k);
        const double im = doubled.im().coeff(k);
        if (re == 0.0 && im == 0.0) continue;
        if (axis != -1 || (re != 0.0 && im != 0.0) || k == 0) {
            throw std::domain_error("entry is not a signed basis axis");
        }
        axis = k;
        imag = im != 0.0;
        value = imag ? im : re;
    }
    if (axis == -1) return "0";
    if (std::abs(value) != 1.0) {
        throw std::domain_error("entry is not a unit basis axis");
    }
    std::string s = value < 0 ? "-" : "";
    if (imag) s += "I ";
    s += "i" + std::to_string(axis);
    return s;
}

}  // namespace

int levi_civita4(int a, int b, int c, int d) {
    const std::array<int, 4> p = {a, b, c, d};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (p[static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(j)]) return 0;
        }
    }
    int sign = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) sign = -sign;
        }
    }
    return sign;
}

CElement pauli_sigma(int j) {
    if (j < 1 || j > 3) {
        throw std::invalid_argument("spin axis index out of range 1..3");
    }
    return CElement::imaginary(Element::basis(quaternion_table(), j));
}

GeneratorSet build_generators(const TablePtr& table) {
    if (table->dim() != 8 || !is_alternative(*table)) {
        throw std::invalid_argument("non-octonion table");
    }
    auto half_basis = [&](int k) { return 0.5 * Element::basis(table, k); };
    const std::array<CElement, 4> r = {CElement(half_basis(4), half_basis(4)),
                                       CElement(half_basis(5), -half_basis(5)),
                                       CElement(half_basis(6), -half_basis(6)),
                                       CElement(half_basis(7), -half_basis(7))};
    auto mm = [&](int mu, int nu) {
        return 0.5 * commutator(r[static_cast<std::size_t>(mu)], r[static_cast<std::size_t>(nu)]);
    };
    return GeneratorSet{table, r,
                        {{{mm(0, 0), mm(0, 1), mm(0, 2), mm(0, 3)},
                          {mm(1, 0), mm(1, 1), mm(1, 2), mm(1, 3)},
                          {mm(2, 0), mm(2, 1), mm(2, 2), mm(2, 3)},
                          {mm(3, 0), mm(3, 1), mm(3, 2), mm(3, 3)}}}};
}

std::array<std::array<std::string, 4>, 4> generator_matrix_symbols(const GeneratorSet& gen) {
    std::array<std::array<std::string, 4>, 4> out;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        for (std::size_t nu = 0; nu < 4; ++nu) {
            out[mu][nu] = symbol_of_doubled(2.0 * gen.m[mu][nu]);
        }
    }
    return out;
}

const std::array<std::array<std::string, 4>, 4>& reference_matrix_symbols() {
    static const std::array<std::array<std::string, 4>, 4> ref = {{
        {"0", "i1", "i2", "i3"},
        {"-i1", "0", "I i3", "-I i2"},
        {"-i2", "-I i3", "0", "I i1"},
        {"-i3", "I i2", "-I i1", "0"},
    }};
    return ref;
}

VerificationReport verify_pauli(double tol) {
    VerificationReport report;
    report.identity = "spin generator products";
    const auto table = quaternion_table();
    const CElement one = CElement::real(Element::scalar(table, 1.0));

    complex<double> measured = 0.0;
    bool measured_set = false;
    for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
            report.total_cases++;
            const CElement prod = pauli_sigma(j) * pauli_sigma(k);
            if (j == k) {
                const double resid = (prod - one).max_abs();
                if (resid > tol) {
                    report.fail({j, k}, to_string(prod), "1", resid);
                }
                continue;
            }
            // expect prod = c * eps_{jkl} sigma_l for the remaining axis l
            const int l = 6 - j - k;
            const int eps = levi_civita4(0, j, k, l);
            const CElement dir = static_cast<double>(eps) * pauli_sigma(l);
            const complex<double> c = projection_factor(prod, dir);
            const double resid = (prod - c * dir).max_abs();
            if (resid > tol) {
                report.fail({j, k}, to_string(prod), "multiple of remaining spin axis", resid);
            }
            if (!measured_set) {
                measured = c;
                measured_set = true;
            } else if (std::abs(c - measured) > tol) {
                report.fail({j, k}, "coefficient varies with (j,k)", "single coefficient", std::abs(c - measured));
            }
        }
    }
    // anticommutation sigma_j sigma_k + sigma_k sigma_j = 2 delta_jk
    for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
            report.total_cases++;
            const CElement sum = pauli_sigma(j) * pauli_sigma(k) + pauli_sigma(k) * pauli_sigma(j);
            const CElement expect = (j == k) ? 2.0 * one : CElement::zero(table);
            const double resid = (sum - expect).max_abs();
            if (resid > tol) {
                report.fail({j, k}, to_string(sum), j == k ? "2" : "0", resid);
            }
        }
    }
    report.convention_factors["sigma_product_coefficient"] = measured;
    // The coefficient often quoted alongside the matrix form is -I/2; the
    // complexified-basis definition sigma_j = I i_j forces +I instead.
    if (std::abs(measured - complex<double>(0.0, -0.5)) > tol) {
        report.warnings.push_back(
            "sigma_j sigma_k = c eps_jkl sigma_l holds with c = +I, not the often-quoted -I/2");
    }
    return report;
}

VerificationReport verify_lorentz(const GeneratorSet& gen, double tol, kernels::Exec mode) {
    VerificationReport report;
    report.identity = "bracket relation of the generator matrix";
    report.total_cases = 256;

    std::vector<double> residuals(256);
    auto resid_at = [&](int idx) {
        const int mu = (idx >> 6) & 3, nu = (idx >> 4) & 3, rho = (idx >> 2) & 3, sg = idx & 3;
        const CElement lhs = commutator(gen.m[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)],
                                        gen.m[static_cast<std::size_t>(rho)][static_cast<std::size_t>(sg)]);
        // eta_nr M_ms + eta_ms M_nr - eta_mr M_ns - eta_ns M_mr
        CElement sum = CElement::zero(gen.table);
        auto eta = [&](int a, int b) { return a == b ? kMinkowskiDiag[static_cast<std::size_t>(a)] : 0.0; };
        sum = sum + eta(nu, rho) * gen.m[static_cast<std::size_t>(mu)][static_cast<std::size_t>(sg)];
        sum = sum + eta(mu, sg) * gen.m[static_cast<std::size_t>(nu)][static_cast<std::size_t>(rho)];
        sum = sum - eta(mu, rho) * gen.m[static_cast<std::size_t>(nu)][static_cast<std::size_t>(sg)];
        sum = sum - eta(nu, sg) * gen.m[static_cast<std::size_t>(mu)][static_cast<std::size_t>(rho)];
        return (lhs - complex<double>(0.0, 1.0) * sum).max_abs();
    };
    kernels::fill_over_indices(256, resid_at, residuals, mode);

    for (int idx = 0; idx < 256; ++idx) {
        const int mu = (idx >> 6) & 3, nu = (idx >> 4) & 3, rho = (idx >> 2) & 3, sg = idx & 3;
        const char* bucket;
        if (mu == nu || rho == sg) {
            bucket = "degenerate";
        } else if ((mu == rho && nu == sg) || (mu == sg && nu == rho)) {
            bucket = "equal_pair";
        } else if (mu != rho && mu != sg && nu != rho && nu != sg) {
            bucket = "all_distinct";
        } else {
            bucket = "shared_index";
        }
        report.case_counts[bucket]++;
        const double r = residuals[static_cast<std::size_t>(idx)];
        if (r > tol) {
            report.fail({mu, nu, rho, sg}, "bracket of generator pair", "metric combination", r);
        }
    }
    report.metrics["max_residual"] =
        *std::max_element(residuals.begin(), residuals.end());
    return report;
}

VerificationReport verify_r_associator(const GeneratorSet& gen, double tol, kernels::Exec mode) {
    VerificationReport report;
    report.identity = "generator associator relation";
    report.total_cases = 64;

    auto base_of = [&](int mu, int nu, int rho) {
        CElement base = CElement::zero(gen.table);
        for (int xi = 0; xi < 4; ++xi) {
            const int eps = levi_civita4(mu, nu, rho, xi);
            if (eps == 0) continue;
            base = base + (static_cast<double>(eps) * kMinkowskiDiag[static_cast<std::size_t>(xi)]) *
                              gen.r[static_cast<std::size_t>(xi)];
        }
        return base;
    };

    // Measure the prefactor from the first nondegenerate triple, then hold
    // every ordered triple to it.
    complex<double> factor = 0.0;
    bool factor_set = false;
    for (int mu = 0; mu < 4 && !factor_set; ++mu) {
        for (int nu = 0; nu < 4 && !factor_set; ++nu) {
            for (int rho = 0; rho < 4 && !factor_set; ++rho) {
                if (mu == nu || nu == rho || mu == rho) continue;
                const CElement lhs = associator(gen.r[static_cast<std::size_t>(mu)],
                                                gen.r[static_cast<std::size_t>(nu)],
                                                gen.r[static_cast<std::size_t>(rho)]);
                factor = projection_factor(lhs, base_of(mu, nu, rho));
                factor_set = true;
            }
        }
    }

    std::vector<double> residuals(64);
    auto resid_at = [&](int idx) {
        const int mu = (idx >> 4) & 3, nu = (idx >> 2) & 3, rho = idx & 3;
        const CElement lhs = associator(gen.r[static_cast<std::size_t>(mu)],
                                        gen.r[static_cast<std::size_t>(nu)],
                                        gen.r[static_cast<std::size_t>(rho)]);
        return (lhs - factor * base_of(mu, nu, rho)).max_abs();
    };
    kernels::fill_over_indices(64, resid_at, residuals, mode);
    for (int idx = 0; idx < 64; ++idx) {
        const double r = residuals[static_cast<std::size_t>(idx)];
        if (r > tol) {
            report.fail({(idx >> 4) & 3, (idx >> 2) & 3, idx & 3}, "generator associator",
                        "prefactor times metric-weighted generator", r);
        }
    }
    report.convention_factors["associator_prefactor"] = factor;
    report.metrics["max_residual"] = *std::max_element(residuals.begin(), residuals.end());
    if (std::abs(std::abs(factor) - 2.0) > tol) {
        report.warnings.push_back(
            "associator prefactor has magnitude " + std::to_string(std::abs(factor)) +
            ", not the magnitude-2 coefficient of the unit four-tuple identity");
    }
    return report;
}

VerificationReport verify_spin_from_r(const GeneratorSet& gen, double tol) {
    VerificationReport report;
    report.identity = "spin generators rebuilt from bracket products";
    std::array<complex<double>, 3> factors{};
    for (int j = 1; j <= 3; ++j) {
        report.total_cases++;
        CElement s = CElement::zero(gen.table);
        for (int k = 1; k <= 3; ++k) {
            for (int l = 1; l <= 3; ++l) {
                const int eps = levi_civita4(0, j, k, l);
                if (eps == 0) continue;
                s = s + static_cast<double>(eps) *
                            (gen.r[static_cast<std::size_t>(k)] * gen.r[static_cast<std::size_t>(l)]);
            }
        }
        s = complex<double>(0.0, -0.25) * s;
        const CElement dir = CElement::imaginary(Element::basis(gen.table, j));
        const complex<double> factor = projection_factor(s, dir);
        const double resid = (s - factor * dir).max_abs();
        if (resid > tol) {
            report.fail({j}, to_string(s), "multiple of I*i" + std::to_string(j), resid);
        }
        factors[static_cast<std::size_t>(j - 1)] = factor;
        report.convention_factors["spin_axis_factor_" + std::to_string(j)] = factor;
    }
    // Both findings are reported, not failed: whether the factor is the
    // same for every axis, and whether it equals 1 (exact identity).
    const bool j_independent = std::abs(factors[1] - factors[0]) <= tol &&
                               std::abs(factors[2] - factors[0]) <= tol;
    report.metrics["factor_j_independent"] = j_independent ? 1.0 : 0.0;
    report.metrics["exact_identity"] = std::abs(factors[0] - 1.0) <= tol ? 1.0 : 0.0;
    if (!j_independent) {
        report.warnings.push_back("axis factor varies with j on this table");
    }
    if (std::abs(factors[0] - 1.0) > tol) {
        report.warnings.push_back(
            "rebuilt spin generators are proportional, not equal, to I*i_j; factor for i_1: re=" +
            std::to_string(factors[0].real()) + " im=" + std::to_string(factors[0].imag()));
    }
    return report;
}

VerificationReport verify_four_tuple(const TablePtr& table, double tol, kernels::Exec mode) {
    VerificationReport report;
    report.identity = "antiassociative four-tuple associator";
    report.total_cases = 24;
    if (table->dim() != 8) {
        throw std::invalid_argument("non-octonion table");
    }

    auto b = [&](int k) { return Element::basis(table, k); };
    // Orientation induced by the table, read off one associator.
    const Element probe = associator(b(4), b(5), b(6));
    const double eps_base = probe.coeff(7) / 2.0;
    report.convention_factors["eps_4567"] = eps_base;

    std::vector<std::array<int, 3>> triples;
    for (int mu = 4; mu < 8; ++mu) {
        for (int nu = 4; nu < 8; ++nu) {
            for (int rho = 4; rho < 8; ++rho) {
                if (mu == nu || nu == rho || mu == rho) continue;
                triples.push_back({mu, nu, rho});
            }
        }
    }
    std::vector<double> residuals(triples.size());
    auto resid_at = [&](int i) {
        const auto [mu, nu, rho] = triples[static_cast<std::size_t>(i)];
        const int sigma = 4 + 5 + 6 + 7 - mu - nu - rho;
        const int perm = levi_civita4(mu - 4, nu - 4, rho - 4, sigma - 4);
        const Element lhs = associator(b(mu), b(nu), b(rho));
        const Element rhs = (2.0 * eps_base * perm) * b(sigma);
        return (lhs - rhs).max_abs();
    };
    kernels::fill_over_indices(static_cast<int>(triples.size()), resid_at, residuals, mode);
    for (std::size_t i = 0; i < triples.size(); ++i) {
        if (residuals[i] > tol) {
            report.fail({triples[i][0], triples[i][1], triples[i][2]}, "four-tuple associator",
                        "oriented axis, coefficient 2", residuals[i]);
        }
    }
    report.metrics["max_residual"] = *std::max_element(residuals.begin(), residuals.end());
    return report;
}

}  // namespace octlab
