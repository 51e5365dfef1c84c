#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "octlab/catalog.hpp"
#include "octlab/derivations.hpp"
#include "octlab/kernels.hpp"
#include "octlab/lorentz.hpp"
#include "octlab/rng.hpp"

using namespace octlab;
using kernels::Exec;

// The OpenMP paths must reproduce the serial reference bit for bit:
// per-index work is independent and the only reduction is max.

TEST_CASE("candidate filter agrees across execution modes") {
    const auto candidates = enumerate_candidates();
    std::vector<char> serial(candidates.size()), parallel(candidates.size());
    kernels::filter_alternative(candidates, serial, Exec::Serial);
    kernels::filter_alternative(candidates, parallel, Exec::Parallel);
    CHECK(serial == parallel);
    CHECK(std::count(serial.begin(), serial.end(), 1) == 16);
}

TEST_CASE("norm sweep agrees across execution modes") {
    Rng rng(19);
    std::vector<std::array<double, 16>> pairs(5000);
    for (auto& p : pairs) {
        for (auto& v : p) v = rng.next_symmetric();
    }
    for (const std::uint8_t mask : {0, 1, 19, 90}) {
        const auto t = make_candidate({mask});
        const double s = kernels::norm_composition_residual(*t, pairs, Exec::Serial);
        const double p = kernels::norm_composition_residual(*t, pairs, Exec::Parallel);
        CHECK(s == p);
    }
}

TEST_CASE("norm sweep separates the class from the rest") {
    Rng rng(19);
    std::vector<std::array<double, 16>> pairs(1000);
    for (auto& p : pairs) {
        for (auto& v : p) v = rng.next_symmetric();
    }
    CHECK(kernels::norm_composition_residual(*reference_octonion(), pairs, Exec::Parallel) <= 1e-12);
    CHECK(kernels::norm_composition_residual(*make_candidate({1}), pairs, Exec::Parallel) > 1e-3);
}

TEST_CASE("index sweeps agree across execution modes") {
    auto f = [](int i) { return static_cast<double>((i * 2654435761u) % 1000) / 997.0; };
    const double s = kernels::max_over_indices(10000, f, Exec::Serial);
    const double p = kernels::max_over_indices(10000, f, Exec::Parallel);
    CHECK(s == p);

    std::vector<double> a(10000), b(10000);
    kernels::fill_over_indices(10000, f, a, Exec::Serial);
    kernels::fill_over_indices(10000, f, b, Exec::Parallel);
    CHECK(a == b);
}

TEST_CASE("identity suites agree across execution modes") {
    const auto gen = build_generators(reference_octonion());
    const auto ls = verify_lorentz(gen, 1e-12, Exec::Serial);
    const auto lp = verify_lorentz(gen, 1e-12, Exec::Parallel);
    CHECK(ls.passed() == lp.passed());
    CHECK(ls.metrics.at("max_residual") == lp.metrics.at("max_residual"));

    const auto d = derivation(Element::basis(gen.table, 1), Element::basis(gen.table, 2));
    const auto vs = verify_leibniz(d, 2000, 7, 1e-10, Exec::Serial);
    const auto vp = verify_leibniz(d, 2000, 7, 1e-10, Exec::Parallel);
    CHECK(vs.passed());
    CHECK(vs.metrics.at("max_residual") == vp.metrics.at("max_residual"));
}

TEST_CASE("catalog construction agrees across execution modes") {
    const Catalog s = valid_algebras(Exec::Serial);
    const Catalog p = valid_algebras(Exec::Parallel);
    REQUIRE(s.size() == p.size());
    CHECK(s.masks == p.masks);
    for (int i = 0; i < s.size(); ++i) {
        CHECK(s.tables[static_cast<std::size_t>(i)]->same_rule(*p.tables[static_cast<std::size_t>(i)]));
    }
}
