#include <catch2/catch.hpp>

#include <random>

#include "geomseq/lincomp.hpp"

using namespace geomseq;

namespace {

SymbolSequence random_seq(u32 ell, u64 N, std::mt19937& rng) {
    std::vector<u32> sym(N);
    for (auto& s : sym) s = rng() % ell;
    return SymbolSequence(ell, sym);
}

u32 smallest_nonresidue(u32 p) {
    for (u32 a = 2; a < p; ++a)
        if (legendre_symbol(a, p) == -1) return a;
    FAIL("no nonresidue");
    return 0;
}

} // namespace

TEST_CASE("linear complexity edge cases") {
    SymbolSequence zero(2, std::vector<u32>(12, 0));
    for (auto rep : {berlekamp_massey(zero), minimal_poly_gcd(zero)}) {
        CHECK(rep.linear_complexity == 0);
        CHECK(rep.minimal_poly == DensePoly::one(2));
    }

    std::vector<u32> impulse(16, 0);
    impulse[0] = 1;
    SymbolSequence imp(2, impulse);
    for (auto rep : {berlekamp_massey(imp), minimal_poly_gcd(imp)}) {
        CHECK(rep.linear_complexity == 16);
        CHECK(rep.minimal_poly == DensePoly::x_pow_minus_one(2, 16));
    }

    SymbolSequence constant(3, std::vector<u32>{2});
    for (auto rep : {berlekamp_massey(constant), minimal_poly_gcd(constant)}) {
        CHECK(rep.linear_complexity == 1);
        CHECK(rep.minimal_poly == DensePoly(3, {2, 1})); // x - 1
    }
}

TEST_CASE("berlekamp-massey agrees with the gcd formulation on random periodic input") {
    std::mt19937 rng(101);
    for (u32 ell : {2u, 3u}) {
        for (int trial = 0; trial < 120; ++trial) {
            u64 N = 1 + rng() % 256;
            SymbolSequence s = random_seq(ell, N, rng);
            LcReport bm = berlekamp_massey(s);
            LcReport gc = minimal_poly_gcd(s);
            REQUIRE(bm.linear_complexity == gc.linear_complexity);
            REQUIRE(bm.minimal_poly == gc.minimal_poly);
        }
    }
}

TEST_CASE("minimal polynomial invariants") {
    std::mt19937 rng(103);
    for (u32 ell : {2u, 3u}) {
        for (int trial = 0; trial < 30; ++trial) {
            u64 N = 1 + rng() % 64;
            SymbolSequence s = random_seq(ell, N, rng);
            LcReport rep = minimal_poly_gcd(s);
            if (rep.linear_complexity == 0) {
                CHECK(rep.minimal_poly == DensePoly::one(ell));
            } else {
                CHECK(rep.minimal_poly.degree() == rep.linear_complexity);
                CHECK(rep.minimal_poly.leading() == 1);
            }
            CHECK(poly_divides(rep.minimal_poly, DensePoly::x_pow_minus_one(ell, N)));
            CHECK(recurrence_regenerates(rep, s));
            CHECK(recurrence_regenerates(berlekamp_massey(s), s));
        }
    }
}

TEST_CASE("bit-packed path handles multi-word periods") {
    std::mt19937 rng(107);
    for (u64 N : {63ull, 64ull, 65ull, 127ull, 128ull, 400ull}) {
        SymbolSequence s = random_seq(2, N, rng);
        LcReport bm = berlekamp_massey(s);
        LcReport gc = minimal_poly_gcd(s);
        CHECK(bm.linear_complexity == gc.linear_complexity);
        CHECK(bm.minimal_poly == gc.minimal_poly);
    }
}

TEST_CASE("NTU sequences at desk scale, both methods") {
    ExtField F = ExtField::with_default_poly(7, 2);
    SymbolSequence T = generalized_ntu(F, 2, 3);
    SymbolSequence t = short_companion(F, 2, 3);
    CHECK(minimal_poly_gcd(T).linear_complexity == 33);
    CHECK(minimal_poly_gcd(t).linear_complexity == 5);
    CHECK(berlekamp_massey(T).linear_complexity == 33);
    CHECK(berlekamp_massey(t).linear_complexity == 5);
    CHECK(berlekamp_massey(T).minimal_poly == minimal_poly_gcd(T).minimal_poly);

    ExtField G = ExtField::with_default_poly(13, 2);
    SymbolSequence U = generalized_ntu(G, 3, 2);
    CHECK(berlekamp_massey(U).linear_complexity == minimal_poly_gcd(U).linear_complexity);
    CHECK(berlekamp_massey(U).minimal_poly == minimal_poly_gcd(U).minimal_poly);
}

TEST_CASE("first Hasse derivative of T(x) at 1 follows the mod-8 split") {
    // nonresidue A, p = 3 mod 4, odd m: value is 0 for p = 3 (mod 8) and
    // 1 for p = 7 (mod 8)
    for (u32 p : {11u, 19u}) {
        ExtField F = ExtField::with_default_poly(p, 3);
        DensePoly Tx = seq_polynomial(generalized_ntu(F, 2, smallest_nonresidue(p)));
        CHECK(hasse_eval_at_one(Tx, 1) == 0);
    }
    for (u32 p : {7u, 23u}) {
        ExtField F = ExtField::with_default_poly(p, 3);
        DensePoly Tx = seq_polynomial(generalized_ntu(F, 2, smallest_nonresidue(p)));
        CHECK(hasse_eval_at_one(Tx, 1) == 1);
    }
}

TEST_CASE("constant offset changes L by the multiplicity three-case rule") {
    // For Tbar_n = T_n + a (a != 0): with w = mult of 1 in x^N - 1 and
    // v = mult of 1 in T(x),
    //   w <= v      ->  L(Tbar) = L(T) + 1
    //   w == v + 1  ->  L(Tbar) = L(T) - 1
    //   w >  v + 1  ->  L(Tbar) = L(T)
    // The middle case rests on a leading-coefficient cancellation that is
    // automatic only over F_2; over larger fields it depends on a, so there
    // it degrades to {L(T)-1, L(T)} and the exact value is pinned by
    // min(w, mult of 1 in Tbar(x)). Both forms are asserted here.
    std::mt19937 rng(211);
    int seen_case[3] = {0, 0, 0};
    for (u32 ell : {2u, 3u}) {
        for (int trial = 0; trial < 400; ++trial) {
            u64 N = (ell == 2 ? std::vector<u64>{4, 6, 8, 12, 16, 24}[rng() % 6]
                             : std::vector<u64>{3, 6, 9, 12, 18}[rng() % 5]);
            SymbolSequence T = random_seq(ell, N, rng);
            DensePoly Tx = seq_polynomial(T);
            if (Tx.is_zero()) continue;
            u64 w = multiplicity_at_one(DensePoly::x_pow_minus_one(ell, N));
            u64 v = multiplicity_at_one(Tx);
            u32 a = 1 + rng() % (ell - 1);
            std::vector<u32> shifted(N);
            for (u64 n = 0; n < N; ++n) shifted[n] = (T.at(n) + a) % ell;
            SymbolSequence Tbar(ell, shifted);
            i64 lT = static_cast<i64>(minimal_poly_gcd(T).linear_complexity);
            i64 lTbar = static_cast<i64>(minimal_poly_gcd(Tbar).linear_complexity);

            // exact law: the gcd with x^N - 1 changes only at the root 1
            DensePoly Tbx = seq_polynomial(Tbar);
            u64 vbar = Tbx.is_zero() ? w : multiplicity_at_one(Tbx);
            CHECK(lTbar - lT == static_cast<i64>(std::min(w, v)) - static_cast<i64>(std::min(w, vbar)));

            if (w <= v) {
                CHECK(lTbar == lT + 1);
                ++seen_case[0];
            } else if (w == v + 1) {
                if (ell == 2) CHECK(lTbar == lT - 1);
                CHECK((lTbar == lT - 1 || lTbar == lT));
                ++seen_case[1];
            } else {
                CHECK(lTbar == lT);
                ++seen_case[2];
            }
        }
    }
    // all three branches actually exercised
    CHECK(seen_case[0] > 0);
    CHECK(seen_case[1] > 0);
    CHECK(seen_case[2] > 0);
}

TEST_CASE("case-2 cancellation counterexample outside F_2 is pinned") {
    // T = (1,1,1) over F_3 with offset a = 1: w = 3, v = 2 (case 2), yet
    // Tbar = (2,2,2) keeps L = 1
    SymbolSequence T(3, std::vector<u32>{1, 1, 1});
    SymbolSequence Tbar(3, std::vector<u32>{2, 2, 2});
    CHECK(multiplicity_at_one(DensePoly::x_pow_minus_one(3, 3)) == 3);
    CHECK(multiplicity_at_one(seq_polynomial(T)) == 2);
    CHECK(minimal_poly_gcd(T).linear_complexity == 1);
    CHECK(minimal_poly_gcd(Tbar).linear_complexity == 1);
    // the same shape with a = 2 does cancel
    SymbolSequence Tzero(3, std::vector<u32>{0, 0, 0});
    CHECK(minimal_poly_gcd(Tzero).linear_complexity == 0);
}

TEST_CASE("sequence polynomial") {
    ExtField F(3, 2, {2, 2, 1});
    DensePoly Tx = seq_polynomial(generalized_ntu(F, 2, 1));
    CHECK(Tx == DensePoly(2, {0, 1, 0, 1, 1, 0, 0, 0}));
}
