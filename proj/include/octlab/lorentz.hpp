#pragma once

#include <array>
#include <string>

#include "octlab/element.hpp"
#include "octlab/kernels.hpp"
#include "octlab/report.hpp"

namespace octlab {

// Minkowski signature (+,-,-,-), fixed.
constexpr std::array<double, 4> kMinkowskiDiag = {1.0, -1.0, -1.0, -1.0};

// sign of the permutation (a,b,c,d) of (0,1,2,3); 0 if indices repeat
int levi_civita4(int a, int b, int c, int d);

// Spin generator over the complexified quaternions: sigma_j = I i_j.
CElement pauli_sigma(int j);

// The four complexified-octonion generators R and their commutator
// bracket matrix M over one algebra of the equivalence class.
struct GeneratorSet {
    TablePtr table;
    std::array<CElement, 4> r;
    std::array<std::array<CElement, 4>, 4> m;
};

GeneratorSet build_generators(const TablePtr& table);

// Symbolic form of 2*M: each entry is one of "0", "±ik", "±I ik".
// Throws if an entry is not of that shape.
std::array<std::array<std::string, 4>, 4> generator_matrix_symbols(const GeneratorSet& gen);

// Expected symbolic matrix on the reference algebra.
const std::array<std::array<std::string, 4>, 4>& reference_matrix_symbols();

VerificationReport verify_pauli(double tol = 1e-12);
VerificationReport verify_lorentz(const GeneratorSet& gen, double tol = 1e-12,
                                  kernels::Exec mode = kernels::Exec::Parallel);
VerificationReport verify_r_associator(const GeneratorSet& gen, double tol = 1e-12,
                                       kernels::Exec mode = kernels::Exec::Parallel);
VerificationReport verify_spin_from_r(const GeneratorSet& gen, double tol = 1e-12);
VerificationReport verify_four_tuple(const TablePtr& table, double tol = 1e-12,
                                     kernels::Exec mode = kernels::Exec::Parallel);

}  // namespace octlab
