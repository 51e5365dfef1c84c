#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "octlab/kernels.hpp"
#include "octlab/report.hpp"
#include "octlab/structure_table.hpp"

namespace octlab {

// Fixed triplet order used everywhere: {123, 761, 572, 653, 145, 246, 347}.
// Parity bit k flips the sign of triplet k.
struct ParityVector {
    std::uint8_t bits = 0;

    bool swapped(int k) const { return (bits >> k) & 1; }
    bool operator==(const ParityVector&) const = default;
};

// Subset of the four involutive parity maps, composed; composition is XOR
// of the per-map parity masks.
struct AutomorphismLabel {
    std::array<bool, 4> t{};  // t[n] = map n participates

    static AutomorphismLabel single(int n);
    AutomorphismLabel compose(const AutomorphismLabel& other) const;
    std::uint8_t parity_mask() const;
    bool operator==(const AutomorphismLabel&) const = default;
};

TablePtr reference_octonion();   // id O0, all parities unswapped
TablePtr quaternion_table();     // id H0, triplet 123
TablePtr complex_table();        // id C, dim 2

TablePtr make_candidate(ParityVector p);
std::vector<TablePtr> enumerate_candidates();  // all 128, bits as binary counter

bool is_alternative(const StructureTable& t);

// Parity vector of a dim-8 table relative to the reference triplet order,
// or nullopt if the table does not share the reference triple structure.
std::optional<ParityVector> parity_of(const StructureTable& t);

// The alternative composition algebras among the 128 candidates, in
// canonical order (ascending parity bits); index 0 is the reference table.
struct Catalog {
    std::vector<TablePtr> tables;       // ids O0..O15
    std::vector<std::uint8_t> masks;    // parity bits per entry

    int index_of_mask(std::uint8_t mask) const;  // -1 if absent
    int size() const { return static_cast<int>(tables.size()); }
};

Catalog valid_algebras(kernels::Exec mode = kernels::Exec::Parallel,
                       std::uint64_t spot_check_seed = 1);

// Shared catalog instance built once with the defaults above.
const Catalog& canonical_catalog();

// Lookup by label: "C", "H0", or "O0".."O15".
TablePtr table_by_id(const std::string& id);

TablePtr apply_automorphism(const AutomorphismLabel& label, const TablePtr& t);

VerificationReport automorphism_group_check();

// Partition of catalog indices into the two orbits of the subgroup
// generated by the three four-triplet maps.
std::array<std::vector<int>, 2> chirality_classes(const Catalog& c);

}  // namespace octlab
