#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "octlab/catalog.hpp"
#include "octlab/element.hpp"
#include "octlab/rng.hpp"

using namespace octlab;

TEST_CASE("candidate enumeration covers all parity assignments") {
    const auto candidates = enumerate_candidates();
    REQUIRE(candidates.size() == 128);
    CHECK(candidates[0]->same_rule(*reference_octonion()));

    // single-bit flip changes exactly the first triplet
    const auto flipped = candidates[1];
    CHECK(flipped->product_sign(1, 2) == -1);
    CHECK(flipped->product_index(1, 2) == 3);
    CHECK(flipped->product_sign(1, 4) == +1);
    CHECK(flipped->product_sign(7, 6) == +1);
}

TEST_CASE("alternativity filter") {
    CHECK(is_alternative(*reference_octonion()));
    CHECK_FALSE(is_alternative(*make_candidate({1})));
    CHECK(is_alternative(*make_candidate({127})));  // all seven parities swapped
    CHECK(is_alternative(*quaternion_table()));
    CHECK(is_alternative(*complex_table()));
}

TEST_CASE("sixteen equivalent algebras") {
    const Catalog c = valid_algebras();
    REQUIRE(c.size() == 16);
    CHECK(c.tables[0]->same_rule(*reference_octonion()));
    CHECK(c.masks[0] == 0);
    CHECK(std::is_sorted(c.masks.begin(), c.masks.end()));

    // closed under every label
    for (int bits = 0; bits < 16; ++bits) {
        AutomorphismLabel l;
        for (int n = 0; n < 4; ++n) l.t[static_cast<std::size_t>(n)] = (bits >> n) & 1;
        for (const auto& table : c.tables) {
            const auto moved = apply_automorphism(l, table);
            CHECK(c.index_of_mask(parity_of(*moved)->bits) >= 0);
        }
    }
}

TEST_CASE("first map swaps exactly the three extension triplets") {
    const auto moved = apply_automorphism(AutomorphismLabel::single(0), reference_octonion());
    const auto p = parity_of(*moved);
    REQUIRE(p.has_value());
    CHECK(p->bits == 0b1110000);  // triplets {145, 246, 347}
    CHECK(moved->product_sign(1, 2) == +1);
    CHECK(moved->product_sign(1, 4) == -1);
    CHECK(moved->product_sign(2, 4) == -1);
    CHECK(moved->product_sign(3, 4) == -1);
}

TEST_CASE("labels are involutive and compose by parity-mask xor") {
    const Catalog c = valid_algebras();
    for (int n = 0; n < 4; ++n) {
        const auto l = AutomorphismLabel::single(n);
        CHECK(l.compose(l).parity_mask() == 0);
        const auto once = apply_automorphism(l, c.tables[5]);
        CHECK(apply_automorphism(l, once)->same_rule(*c.tables[5]));
    }
    // xor composition property over all label pairs and all tables
    for (int x = 0; x < 16; ++x) {
        for (int y = 0; y < 16; ++y) {
            AutomorphismLabel lx, ly;
            for (int n = 0; n < 4; ++n) {
                lx.t[static_cast<std::size_t>(n)] = (x >> n) & 1;
                ly.t[static_cast<std::size_t>(n)] = (y >> n) & 1;
            }
            CHECK(lx.compose(ly).parity_mask() == (lx.parity_mask() ^ ly.parity_mask()));
            const auto& table = c.tables[static_cast<std::size_t>((x * 7 + y) % 16)];
            const auto chained = apply_automorphism(lx, apply_automorphism(ly, table));
            const auto direct = apply_automorphism(lx.compose(ly), table);
            CHECK(chained->same_rule(*direct));
        }
    }
}

TEST_CASE("composing the first two maps negates every imaginary product sign") {
    const auto l = AutomorphismLabel::single(0).compose(AutomorphismLabel::single(1));
    const auto moved = apply_automorphism(l, reference_octonion());
    // rebuilding the table under i_k -> -i_k must reproduce it
    const auto t = reference_octonion();
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            if (i == j) continue;
            CHECK(moved->product_index(i, j) == t->product_index(i, j));
            CHECK(moved->product_sign(i, j) == -t->product_sign(i, j));
        }
    }
}

TEST_CASE("apply_automorphism rejects tables outside the class") {
    CHECK_THROWS_WITH_AS(apply_automorphism(AutomorphismLabel::single(1), make_candidate({1})),
                         "not an equivalent algebra", std::domain_error);
    CHECK_THROWS_WITH_AS(apply_automorphism(AutomorphismLabel::single(1), quaternion_table()),
                         "not an equivalent algebra", std::domain_error);
}

TEST_CASE("group structure report") {
    const auto report = automorphism_group_check();
    CHECK(report.passed());
    CHECK(report.metrics.at("group_order") == 16.0);
    CHECK(report.case_counts.at("chirality_class_0") == 8);
    CHECK(report.case_counts.at("chirality_class_1") == 8);
}

TEST_CASE("chirality classes partition the sixteen") {
    const Catalog c = valid_algebras();
    const auto classes = chirality_classes(c);
    REQUIRE(classes[0].size() == 8);
    REQUIRE(classes[1].size() == 8);
    CHECK(classes[0][0] == 0);
    std::set<int> all;
    for (int i : classes[0]) all.insert(i);
    for (int i : classes[1]) all.insert(i);
    CHECK(all.size() == 16);
    // the chirality-switching map sends class 0 into class 1
    for (int i : classes[0]) {
        const auto moved =
            apply_automorphism(AutomorphismLabel::single(0), c.tables[static_cast<std::size_t>(i)]);
        const int j = c.index_of_mask(parity_of(*moved)->bits);
        CHECK(std::find(classes[1].begin(), classes[1].end(), j) != classes[1].end());
    }
}

TEST_CASE("norm composition holds on a thousand pairs for every member") {
    Rng rng(101);
    std::vector<std::array<double, 16>> pairs(1000);
    for (auto& p : pairs) {
        for (auto& v : p) v = rng.next_symmetric();
    }
    for (const auto& table : valid_algebras().tables) {
        CHECK(kernels::norm_composition_residual(*table, pairs, kernels::Exec::Parallel) <= 1e-12);
    }
}

TEST_CASE("spans of single imaginary axes multiply identically in all sixteen") {
    const Catalog c = valid_algebras();
    for (const auto& table : c.tables) {
        for (int k = 1; k < 8; ++k) {
            const Element ik = Element::basis(table, k);
            CHECK((ik * ik - Element::scalar(table, -1.0)).max_abs() == 0.0);
        }
    }
}
