#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace octlab {

// Seeded generator for property sweeps. Doubles are derived from raw
// 64-bit draws so streams are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1)
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    std::array<double, 8> next_coeffs(int dim) {
        std::array<double, 8> c{};
        for (int k = 0; k < dim; ++k) c[static_cast<std::size_t>(k)] = next_symmetric();
        return c;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace octlab
