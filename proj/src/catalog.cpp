#include "octlab/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "octlab/element.hpp"
#include "octlab/rng.hpp"

namespace octlab {

namespace {

constexpr std::array<std::array<int, 3>, 7> kTripletOrder = {
    {{1, 2, 3}, {7, 6, 1}, {5, 7, 2}, {6, 5, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}}};

// Parity masks of the four generating maps, positional over kTripletOrder.
// Map 0 swaps the three triplets through the extension axis; maps 1..3
// each swap four triplets.
constexpr std::array<std::uint8_t, 4> kAutomorphismMasks = {
    0b1110000,  // swaps triplets {145, 246, 347}
    0b0001111,  // swaps triplets {123, 761, 572, 653}
    0b1011010,  // swaps triplets {761, 653, 145, 347}
    0b1101100,  // swaps triplets {572, 653, 246, 347}
};

std::vector<SignedTriplet> triplets_for(ParityVector p) {
    std::vector<SignedTriplet> ts;
    ts.reserve(7);
    for (int k = 0; k < 7; ++k) {
        const auto& [a, b, c] = kTripletOrder[static_cast<std::size_t>(k)];
        ts.push_back({a, b, c, p.swapped(k) ? -1 : +1});
    }
    return ts;
}

}  // namespace

AutomorphismLabel AutomorphismLabel::single(int n) {
    if (n < 0 || n > 3) throw std::invalid_argument("automorphism index out of range 0..3");
    AutomorphismLabel l;
    l.t[static_cast<std::size_t>(n)] = true;
    return l;
}

AutomorphismLabel AutomorphismLabel::compose(const AutomorphismLabel& other) const {
    AutomorphismLabel l;
    for (std::size_t n = 0; n < 4; ++n) l.t[n] = t[n] != other.t[n];
    return l;
}

std::uint8_t AutomorphismLabel::parity_mask() const {
    std::uint8_t m = 0;
    for (std::size_t n = 0; n < 4; ++n) {
        if (t[n]) m ^= kAutomorphismMasks[n];
    }
    return m;
}

TablePtr reference_octonion() {
    static const TablePtr t = StructureTable::make(8, "O0", triplets_for({0}));
    return t;
}

TablePtr quaternion_table() {
    static const TablePtr t = StructureTable::make(4, "H0", {{1, 2, 3, +1}});
    return t;
}

TablePtr complex_table() {
    static const TablePtr t = StructureTable::make(2, "C", {});
    return t;
}

TablePtr make_candidate(ParityVector p) {
    return StructureTable::make(8, "P" + std::to_string(p.bits), triplets_for(p));
}

std::vector<TablePtr> enumerate_candidates() {
    std::vector<TablePtr> out;
    out.reserve(128);
    for (int mask = 0; mask < 128; ++mask) {
        out.push_back(make_candidate({static_cast<std::uint8_t>(mask)}));
    }
    return out;
}

bool is_alternative(const StructureTable& t) {
    return kernels::alternativity_violation(t) < 0.5;
}

std::optional<ParityVector> parity_of(const StructureTable& t) {
    if (t.dim() != 8) return std::nullopt;
    ParityVector p;
    for (int k = 0; k < 7; ++k) {
        const auto& [a, b, c] = kTripletOrder[static_cast<std::size_t>(k)];
        if (t.product_index(a, b) != c) return std::nullopt;
        if (t.product_sign(a, b) < 0) p.bits |= static_cast<std::uint8_t>(1 << k);
    }
    return p;
}

int Catalog::index_of_mask(std::uint8_t mask) const {
    for (int i = 0; i < size(); ++i) {
        if (masks[static_cast<std::size_t>(i)] == mask) return i;
    }
    return -1;
}

Catalog valid_algebras(kernels::Exec mode, std::uint64_t spot_check_seed) {
    const auto candidates = enumerate_candidates();
    std::vector<char> flags(candidates.size(), 0);
    kernels::filter_alternative(candidates, flags, mode);

    Rng rng(spot_check_seed);
    std::vector<std::array<double, 16>> pairs(100);
    for (auto& pr : pairs) {
        for (auto& v : pr) v = rng.next_symmetric();
    }

    Catalog c;
    for (std::size_t m = 0; m < candidates.size(); ++m) {
        if (!flags[m]) continue;
        if (kernels::norm_composition_residual(*candidates[m], pairs, mode) > 1e-12) continue;
        const int idx = c.size();
        c.masks.push_back(static_cast<std::uint8_t>(m));
        c.tables.push_back(StructureTable::make(8, "O" + std::to_string(idx),
                                                candidates[m]->triplets()));
    }
    if (c.size() != 16 || c.masks[0] != 0) {
        throw std::logic_error("candidate filter did not produce the expected algebra class");
    }
    return c;
}

const Catalog& canonical_catalog() {
    static const Catalog c = valid_algebras();
    return c;
}

TablePtr table_by_id(const std::string& id) {
    if (id == "C") return complex_table();
    if (id == "H0") return quaternion_table();
    if (id.size() > 1 && id[0] == 'O') {
        const int n = std::stoi(id.substr(1));
        const Catalog& c = canonical_catalog();
        if (n >= 0 && n < c.size()) return c.tables[static_cast<std::size_t>(n)];
    }
    throw std::invalid_argument("unknown table id `" + id + "`");
}

TablePtr apply_automorphism(const AutomorphismLabel& label, const TablePtr& t) {
    const Catalog& c = canonical_catalog();
    const auto p = parity_of(*t);
    if (!p || c.index_of_mask(p->bits) < 0) {
        throw std::domain_error("not an equivalent algebra");
    }
    const int target = c.index_of_mask(static_cast<std::uint8_t>(p->bits ^ label.parity_mask()));
    if (target < 0) {
        throw std::logic_error("automorphism left the algebra class");
    }
    return c.tables[static_cast<std::size_t>(target)];
}

VerificationReport automorphism_group_check() {
    VerificationReport report;
    report.identity = "parity-map group structure";
    const Catalog& c = canonical_catalog();

    // Seven nonidentity compositions of the three same-chirality maps.
    std::vector<AutomorphismLabel> sub;
    for (int bits = 1; bits < 8; ++bits) {
        AutomorphismLabel l;
        for (int n = 1; n <= 3; ++n) l.t[static_cast<std::size_t>(n)] = (bits >> (n - 1)) & 1;
        sub.push_back(l);
    }
    for (std::size_t i = 0; i < sub.size(); ++i) {
        report.total_cases++;
        if (sub[i].parity_mask() == 0) {
            report.fail({static_cast<int>(i)}, "composition " + std::to_string(i), "nonidentity", 1.0);
        }
        for (std::size_t j = i + 1; j < sub.size(); ++j) {
            report.total_cases++;
            if (sub[i].parity_mask() == sub[j].parity_mask()) {
                report.fail({static_cast<int>(i), static_cast<int>(j)}, "equal parity masks",
                            "distinct", 1.0);
            }
        }
    }
    // Any two distinct points compose to a third point of the set: the
    // seven elements tile into lines {g, h, gh}.
    long lines_ok = 0;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        for (std::size_t j = 0; j < sub.size(); ++j) {
            if (i == j) continue;
            report.total_cases++;
            const auto comp = sub[i].compose(sub[j]).parity_mask();
            const bool in_set = std::any_of(sub.begin(), sub.end(), [&](const AutomorphismLabel& l) {
                return l.parity_mask() == comp;
            });
            if (!in_set || comp == sub[i].parity_mask() || comp == sub[j].parity_mask() || comp == 0) {
                report.fail({static_cast<int>(i), static_cast<int>(j)}, "composition off the line",
                            "third point", 1.0);
            } else {
                ++lines_ok;
            }
        }
    }
    report.case_counts["line_pairs"] = lines_ok;

    // All sixteen labels: distinct masks, closed, every element involutive.
    std::vector<AutomorphismLabel> full;
    for (int bits = 0; bits < 16; ++bits) {
        AutomorphismLabel l;
        for (int n = 0; n < 4; ++n) l.t[static_cast<std::size_t>(n)] = (bits >> n) & 1;
        full.push_back(l);
    }
    std::vector<std::uint8_t> masks;
    for (const auto& l : full) masks.push_back(l.parity_mask());
    std::sort(masks.begin(), masks.end());
    report.total_cases++;
    if (std::unique(masks.begin(), masks.end()) != masks.end()) {
        report.fail({}, "duplicate group element", "16 distinct", 1.0);
    }
    for (const auto& l : full) {
        report.total_cases++;
        if (l.compose(l).parity_mask() != 0) {
            report.fail({}, "non-involutive element", "identity square", 1.0);
        }
    }
    report.metrics["group_order"] = static_cast<double>(full.size());

    // Simply transitive action on the sixteen algebras.
    for (int i = 0; i < c.size(); ++i) {
        for (int j = 0; j < c.size(); ++j) {
            report.total_cases++;
            int hits = 0;
            for (const auto& l : full) {
                if ((c.masks[static_cast<std::size_t>(i)] ^ l.parity_mask()) ==
                    c.masks[static_cast<std::size_t>(j)]) {
                    ++hits;
                }
            }
            if (hits != 1) {
                report.fail({i, j}, std::to_string(hits) + " labels map i to j", "exactly 1", 1.0);
            }
        }
    }

    const auto classes = chirality_classes(c);
    report.case_counts["chirality_class_0"] = static_cast<long>(classes[0].size());
    report.case_counts["chirality_class_1"] = static_cast<long>(classes[1].size());
    report.total_cases++;
    if (classes[0].size() != 8 || classes[1].size() != 8) {
        report.fail({}, "orbit sizes " + std::to_string(classes[0].size()) + "+" +
                            std::to_string(classes[1].size()),
                    "8+8", 1.0);
    }
    return report;
}

std::array<std::vector<int>, 2> chirality_classes(const Catalog& c) {
    std::array<std::vector<int>, 2> out;
    // Orbit of the reference algebra under the subgroup generated by the
    // three four-triplet maps; the complement is the opposite class.
    std::vector<std::uint8_t> orbit;
    for (int bits = 0; bits < 8; ++bits) {
        AutomorphismLabel l;
        for (int n = 1; n <= 3; ++n) l.t[static_cast<std::size_t>(n)] = (bits >> (n - 1)) & 1;
        orbit.push_back(l.parity_mask());
    }
    for (int i = 0; i < c.size(); ++i) {
        const bool same = std::find(orbit.begin(), orbit.end(), c.masks[static_cast<std::size_t>(i)]) != orbit.end();
        out[same ? 0 : 1].push_back(i);
    }
    return out;
}

}  // namespace octlab
