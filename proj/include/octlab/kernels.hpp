#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "octlab/structure_table.hpp"

namespace octlab::kernels {

// Every sweep below has a serial reference path and an OpenMP path that
// must produce bit-identical results (per-index work is independent and
// reductions use max, which is rounding-free). Serial is the reference
// used in tests; Parallel is the default in the high-level API.
enum class Exec { Serial, Parallel };

// Largest violation of the linearized alternativity identities
//   (e_i,e_j,e_k) + (e_j,e_i,e_k)  and  (e_i,e_j,e_k) + (e_i,e_k,e_j)
// over all basis index triples. Zero (exact) iff the table is alternative.
double alternativity_violation(const StructureTable& t);

// flags[i] = 1 iff tables[i] is alternative.
void filter_alternative(std::span<const TablePtr> tables, std::span<char> flags, Exec mode);

// max over pre-drawn coefficient pairs of | |ab| - |a||b| |.
// Each pair is 16 doubles: coefficients of a then b.
double norm_composition_residual(const StructureTable& t,
                                 std::span<const std::array<double, 16>> pairs, Exec mode);

// Generic index sweeps used by the identity suites and grid scans.
double max_over_indices(int n, const std::function<double(int)>& residual, Exec mode);
void fill_over_indices(int n, const std::function<double(int)>& value, std::span<double> out,
                       Exec mode);

}  // namespace octlab::kernels
