#include "octlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "octlab/element.hpp"

namespace octlab::kernels {

double alternativity_violation(const StructureTable& t) {
    // Products of basis elements are signed basis elements, so the sums
    // below are exact small integers; any violation is at least 2.
    const int d = t.dim();
    auto prod = [&](int i, int j, double& sign, int& idx) {
        sign = t.product_sign(i, j);
        idx = t.product_index(i, j);
    };
    double worst = 0.0;
    std::array<double, 8> lhs{};
    auto assoc = [&](int i, int j, int k, std::array<double, 8>& out) {
        out.fill(0.0);
        double s1, s2;
        int m1, m2;
        prod(i, j, s1, m1);
        prod(m1, k, s2, m2);
        out[static_cast<std::size_t>(m2)] += s1 * s2;
        prod(j, k, s1, m1);
        prod(i, m1, s2, m2);
        out[static_cast<std::size_t>(m2)] -= s1 * s2;
    };
    std::array<double, 8> a{}, b{};
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                assoc(i, j, k, lhs);
                assoc(j, i, k, a);
                assoc(i, k, j, b);
                for (std::size_t m = 0; m < 8; ++m) {
                    worst = std::max(worst, std::abs(lhs[m] + a[m]));
                    worst = std::max(worst, std::abs(lhs[m] + b[m]));
                }
            }
        }
    }
    return worst;
}

void filter_alternative(std::span<const TablePtr> tables, std::span<char> flags, Exec mode) {
    if (tables.size() != flags.size()) {
        throw std::invalid_argument("filter_alternative: size mismatch");
    }
    const int n = static_cast<int>(tables.size());
    if (mode == Exec::Serial) {
        for (int i = 0; i < n; ++i) {
            flags[static_cast<std::size_t>(i)] = alternativity_violation(*tables[static_cast<std::size_t>(i)]) < 0.5 ? 1 : 0;
        }
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        flags[static_cast<std::size_t>(i)] = alternativity_violation(*tables[static_cast<std::size_t>(i)]) < 0.5 ? 1 : 0;
    }
}

namespace {

// Raw-array product, avoiding Element allocations in the hot loop.
double norm_pair_residual(const StructureTable& t, const std::array<double, 16>& pair) {
    const int d = t.dim();
    std::array<double, 8> out{};
    double na = 0.0, nb = 0.0;
    for (int i = 0; i < d; ++i) {
        na += pair[static_cast<std::size_t>(i)] * pair[static_cast<std::size_t>(i)];
        nb += pair[static_cast<std::size_t>(8 + i)] * pair[static_cast<std::size_t>(8 + i)];
    }
    for (int i = 0; i < d; ++i) {
        const double ai = pair[static_cast<std::size_t>(i)];
        if (ai == 0.0) continue;
        for (int j = 0; j < d; ++j) {
            const double bj = pair[static_cast<std::size_t>(8 + j)];
            if (bj == 0.0) continue;
            out[static_cast<std::size_t>(t.product_index(i, j))] += t.product_sign(i, j) * ai * bj;
        }
    }
    double nab = 0.0;
    for (double v : out) nab += v * v;
    return std::abs(std::sqrt(nab) - std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

double norm_composition_residual(const StructureTable& t,
                                 std::span<const std::array<double, 16>> pairs, Exec mode) {
    const int n = static_cast<int>(pairs.size());
    double worst = 0.0;
    if (mode == Exec::Serial) {
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst, norm_pair_residual(t, pairs[static_cast<std::size_t>(i)]));
        }
        return worst;
    }
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (int i = 0; i < n; ++i) {
        worst = std::max(worst, norm_pair_residual(t, pairs[static_cast<std::size_t>(i)]));
    }
    return worst;
}

double max_over_indices(int n, const std::function<double(int)>& residual, Exec mode) {
    double worst = 0.0;
    if (mode == Exec::Serial) {
        for (int i = 0; i < n; ++i) worst = std::max(worst, residual(i));
        return worst;
    }
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (int i = 0; i < n; ++i) worst = std::max(worst, residual(i));
    return worst;
}

void fill_over_indices(int n, const std::function<double(int)>& value, std::span<double> out,
                       Exec mode) {
    if (static_cast<int>(out.size()) != n) {
        throw std::invalid_argument("fill_over_indices: size mismatch");
    }
    if (mode == Exec::Serial) {
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = value(i);
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = value(i);
}

}  // namespace octlab::kernels
