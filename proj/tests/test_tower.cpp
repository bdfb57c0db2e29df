#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ffa/tower.hpp"

using namespace ffa;

TEST_CASE("make_tower requires a degree divisible by 4") {
    FieldSpec f6 = default_field(6);
    CHECK_THROWS_AS(make_tower(f6), BadTowerIndex);
    FieldSpec f = make_field(4, 0x13);
    TowerView t = make_tower(f);
    CHECK(t.n == 1);
    CHECK(t.q == 2u);
    CHECK(t.ambient == &f);
}

TEST_CASE("frob_q iterates the q-power map") {
    FieldSpec f = default_field(8);
    TowerView t = make_tower(f);
    for (uint32_t a : {0x02u, 0x53u, 0xffu}) {
        CHECK(frob_q(t, a, 1) == f.frobenius(a, 2));
        CHECK(frob_q(t, a, 2) == f.frobenius(a, 4));
        CHECK(frob_q(t, a, 4) == a);
    }
}

TEST_CASE("subfield membership by Frobenius fixed points") {
    FieldSpec f = make_field(4, 0x13);
    TowerView t = make_tower(f);
    CHECK(is_in_subfield(t, 0x1, 1));
    CHECK(is_in_subfield(t, 0x1, 2));
    CHECK_FALSE(is_in_subfield(t, 0x2, 2));  // order 15 does not divide 3
    CHECK(is_in_subfield(t, 0x6, 2));        // g^5 has order 3
    CHECK_THROWS_AS(is_in_subfield(t, 0x1, 3), BadTowerIndex);

    // F_{q^k} has exactly q^k elements
    for (int n : {1, 2}) {
        FieldSpec g = default_field(4 * n);
        TowerView tw = make_tower(g);
        for (int k : {1, 2}) {
            uint64_t members = 0;
            for (uint64_t a = 0; a < g.size(); ++a)
                if (is_in_subfield(tw, static_cast<uint32_t>(a), k)) ++members;
            CHECK(members == (1ull << (tw.n * k)));
        }
    }
}

TEST_CASE("relative trace lands in the target subfield and kills it") {
    for (int n : {1, 2, 3}) {
        FieldSpec f = default_field(4 * n);
        TowerView t = make_tower(f);
        for (uint64_t a = 0; a < f.size(); ++a) {
            const uint32_t x = static_cast<uint32_t>(a);
            CHECK(is_in_subfield(t, rel_trace(t, x, 1), 1));
            CHECK(is_in_subfield(t, rel_trace(t, x, 2), 2));
            CHECK(rel_trace(t, x, 0) <= 1u);
            // Tr_n^{4n} on F_q sums four equal conjugates, zero in char 2
            if (is_in_subfield(t, x, 1)) CHECK(rel_trace(t, x, 1) == 0u);
        }
    }
}

TEST_CASE("Tr_n^{4n} does not vanish on the unit circle away from 1") {
    FieldSpec f = make_field(4, 0x13);
    TowerView t = make_tower(f);
    for (uint32_t c : {0x8u, 0xCu, 0xAu, 0xFu}) CHECK(rel_trace(t, c, 1) != 0u);
}

TEST_CASE("rel_trace rejects bad subfield indices") {
    FieldSpec f = make_field(4, 0x13);
    TowerView t = make_tower(f);
    CHECK_THROWS_AS(rel_trace(t, 0x2, 3), BadTowerIndex);
    CHECK_THROWS_AS(rel_trace(t, 0x2, -1), BadTowerIndex);
}

TEST_CASE("trace tower composes: Tr_n^{4n} = Tr_n^{2n} after Tr_{2n}^{4n}") {
    for (int n : {1, 2}) {
        FieldSpec f = default_field(4 * n);
        TowerView t = make_tower(f);
        for (uint64_t a = 0; a < f.size(); ++a) {
            const uint32_t x = static_cast<uint32_t>(a);
            const uint32_t y = rel_trace(t, x, 2);
            CHECK(rel_trace(t, x, 1) == (y ^ frob_q(t, y, 1)));
        }
    }
}

TEST_CASE("absolute trace factors through the relative trace") {
    for (int n : {1, 2, 3}) {
        FieldSpec f = default_field(4 * n);
        TowerView t = make_tower(f);
        for (uint64_t a = 0; a < f.size(); ++a) {
            const uint32_t x = static_cast<uint32_t>(a);
            CHECK(f.abs_trace(x) == subfield_abs_trace(f, rel_trace(t, x, 1), n));
        }
    }
}

TEST_CASE("trace is F_q-linear") {
    FieldSpec f = default_field(8);
    TowerView t = make_tower(f);
    std::vector<uint32_t> fq;
    for (uint32_t a = 0; a < f.size(); ++a)
        if (is_in_subfield(t, a, 1)) fq.push_back(a);
    REQUIRE(fq.size() == 4);
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        const uint32_t a = rng() & 0xff, b = rng() & 0xff;
        CHECK(rel_trace(t, a ^ b, 1) == (rel_trace(t, a, 1) ^ rel_trace(t, b, 1)));
        for (uint32_t lam : fq)
            CHECK(rel_trace(t, f.mul(lam, a), 1) == f.mul(lam, rel_trace(t, a, 1)));
    }
}

TEST_CASE("subfield_abs_trace validates the subfield") {
    FieldSpec f = make_field(4, 0x13);
    CHECK(subfield_abs_trace(f, 0x6, 2) == 1u);  // Tr_1^2 on F_4
    CHECK(subfield_abs_trace(f, 0x1, 1) == 1u);
    CHECK(subfield_abs_trace(f, 0x5, 4) == f.abs_trace(0x5));
    CHECK_THROWS_AS(subfield_abs_trace(f, 0x2, 2), NotInSubfield);
    CHECK_THROWS_AS(subfield_abs_trace(f, 0x1, 3), BadTowerIndex);  // 3 does not divide 4
    CHECK_THROWS_AS(subfield_abs_trace(f, 0x1, 0), BadTowerIndex);
}

TEST_CASE("element wrappers check the ambient field") {
    FieldSpec f = make_field(4, 0x13);
    FieldSpec g = make_field(4, 0x19);
    TowerView t = make_tower(f);
    CHECK(rel_trace(element(f, 0x8), t, 1).v == rel_trace(t, 0x8, 1));
    CHECK(is_in_subfield(element(f, 0x6), t, 2));
    CHECK_THROWS_AS(rel_trace(element(g, 0x8), t, 1), SpecMismatch);
    CHECK_THROWS_AS(is_in_subfield(element(g, 0x6), t, 2), SpecMismatch);
}
