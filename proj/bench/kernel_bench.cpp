// Timing comparison of the serial reference kernels against the OpenMP
// paths. Workloads are scaled up from the library defaults so the
// parallel speedup is visible.

#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif
#include <chrono>
#include <thread>

#include "octlab/catalog.hpp"
#include "octlab/derivations.hpp"
#include "octlab/kernels.hpp"
#include "octlab/lorentz.hpp"
#include "octlab/rng.hpp"

using namespace octlab;

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

struct Timing {
    double serial = 0.0;
    double parallel = 0.0;
};

volatile double g_sink = 0.0;

Timing time_both(const std::function<double(kernels::Exec)>& run) {
    Timing t;
    double t0 = now_seconds();
    g_sink = run(kernels::Exec::Serial);
    t.serial = now_seconds() - t0;
    t0 = now_seconds();
    g_sink = run(kernels::Exec::Parallel);
    t.parallel = now_seconds() - t0;
    return t;
}

void report(const char* name, const Timing& t) {
    std::printf("%-28s serial %8.3f ms   openmp %8.3f ms   speedup %5.2fx\n", name,
                t.serial * 1e3, t.parallel * 1e3, t.parallel > 0 ? t.serial / t.parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d, hardware threads: %u\n", omp_get_max_threads(),
                std::thread::hardware_concurrency());
#else
    std::printf("built without openmp; both columns run serially\n");
#endif

    // candidate filter, repeated to a meaningful duration
    {
        const auto candidates = enumerate_candidates();
        std::vector<char> flags(candidates.size());
        auto run = [&](kernels::Exec mode) {
            double acc = 0.0;
            for (int rep = 0; rep < 50; ++rep) {
                kernels::filter_alternative(candidates, flags, mode);
                acc += flags[0];
            }
            return acc;
        };
        report("alternative filter x50", time_both(run));
    }

    // norm composition sweep on a large pair sample
    {
        Rng rng(7);
        std::vector<std::array<double, 16>> pairs(200000);
        for (auto& p : pairs) {
            for (auto& v : p) v = rng.next_symmetric();
        }
        const auto table = reference_octonion();
        auto run = [&](kernels::Exec mode) {
            return kernels::norm_composition_residual(*table, pairs, mode);
        };
        report("norm composition 200k", time_both(run));
    }

    // bracket-relation sweep, repeated
    {
        const auto gen = build_generators(reference_octonion());
        auto run = [&](kernels::Exec mode) {
            double acc = 0.0;
            for (int rep = 0; rep < 200; ++rep) {
                acc += verify_lorentz(gen, 1e-12, mode).passed() ? 1.0 : 0.0;
            }
            return acc;
        };
        report("bracket sweep x200", time_both(run));
    }

    // product-rule sweep on one derivation map
    {
        const auto table = reference_octonion();
        const auto d = derivation(Element::basis(table, 1), Element::basis(table, 2));
        auto run = [&](kernels::Exec mode) {
            return verify_leibniz(d, 200000, 11, 1e-10, mode).passed() ? 1.0 : 0.0;
        };
        report("product rule 200k", time_both(run));
    }

    return 0;
}
