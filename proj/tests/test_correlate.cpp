#include <catch2/catch.hpp>

#include <random>

#include "geomseq/correlate.hpp"
#include "geomseq/theorems.hpp"

using namespace geomseq;

namespace {

// per-definition reference sum, independent of the packed implementation
i64 brute_cross(const SymbolSequence& a, const SymbolSequence& b, u64 tau) {
    i64 acc = 0;
    for (u64 i = 0; i < a.period(); ++i)
        acc += a.at(i) == b.at(i + tau) ? 1 : -1;
    return acc;
}

SymbolSequence random_bits(u64 N, std::mt19937& rng) {
    std::vector<u32> sym(N);
    for (auto& s : sym) s = rng() % 2;
    return SymbolSequence(2, sym);
}

} // namespace

TEST_CASE("autocorrelation peak and parity") {
    ExtField F(3, 2, {2, 2, 1});
    SymbolSequence T = generalized_ntu(F, 2, 1);
    CorrelationProfile prof = autocorrelation_profile(T);
    CHECK(prof.values[0] == static_cast<i64>(T.period()));
    for (i64 v : prof.values) CHECK((v - static_cast<i64>(T.period())) % 2 == 0);
    // value pinned by the printed period (0,1,0,1,1,0,0,0)
    CHECK(prof.values[4] == -4);
    CHECK(prof.values[4] == brute_cross(T, T, 4));
}

TEST_CASE("packed correlation equals the definition sum") {
    std::mt19937 rng(301);
    for (u64 N : {5ull, 32ull, 63ull, 64ull, 65ull, 130ull, 200ull}) {
        SymbolSequence a = random_bits(N, rng), b = random_bits(N, rng);
        for (u64 tau = 0; tau < N; ++tau) {
            CHECK(cross_correlation(a, b, static_cast<i64>(tau)) == brute_cross(a, b, tau));
        }
        CorrelationProfile prof = autocorrelation_profile(a);
        for (u64 tau = 0; tau < N; ++tau) CHECK(prof.values[tau] == brute_cross(a, a, tau));
    }
}

TEST_CASE("out-of-range shifts reduce mod N") {
    std::mt19937 rng(303);
    SymbolSequence a = random_bits(40, rng), b = random_bits(40, rng);
    CHECK(cross_correlation(a, b, 47) == cross_correlation(a, b, 7));
    CHECK(cross_correlation(a, b, -3) == cross_correlation(a, b, 37));
}

TEST_CASE("constant sequence correlates at N everywhere") {
    SymbolSequence c(2, std::vector<u32>(9, 1));
    for (i64 v : autocorrelation_profile(c).values) CHECK(v == 9);
}

TEST_CASE("cross-correlation against the complement flips sign") {
    for (auto [p, m] : std::vector<std::pair<u32, u32>>{{3, 2}, {7, 2}, {5, 3}}) {
        ExtField F = ExtField::with_default_poly(p, m);
        for (u32 A = 0; A < p; ++A) {
            SymbolSequence T = generalized_ntu(F, 2, A);
            SymbolSequence Tbar = complement_sequence(T, 1);
            CorrelationProfile prof = autocorrelation_profile(T);
            for (u64 tau = 0; tau < T.period(); ++tau)
                CHECK(cross_correlation(T, Tbar, static_cast<i64>(tau)) == -prof.values[tau]);
        }
    }
}

TEST_CASE("measured T profile obeys the three-value law at every small size") {
    for (auto [p, m] : std::vector<std::pair<u32, u32>>{
             {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {5, 2}, {5, 3}, {5, 4}, {7, 2},
             {7, 3}, {7, 4}, {11, 2}, {11, 3}, {13, 2}, {13, 3}, {17, 2}, {19, 2}, {23, 2},
             {29, 2}, {31, 2}, {37, 2}, {41, 2}, {43, 2}, {47, 2}, {53, 2}}) {
        ExtField F = ExtField::with_default_poly(p, m);
        if (F.q() - 1 > 3000) continue;
        for (u32 A = 1; A < p; ++A) {
            TAutocorrelationLaw law = t_autocorrelation_law(F, A);
            CorrelationProfile prof = autocorrelation_profile(generalized_ntu(F, 2, A));
            for (u64 tau = 0; tau < F.q() - 1; ++tau) REQUIRE(prof.values[tau] == law.value_at(tau));
        }
    }
}

TEST_CASE("profile sums satisfy the imbalance identity") {
    // sum over tau of R(tau) equals the squared symbol imbalance
    std::mt19937 rng(307);
    for (int trial = 0; trial < 40; ++trial) {
        SymbolSequence s = random_bits(3 + rng() % 120, rng);
        i64 imbalance = 0;
        for (u64 n = 0; n < s.period(); ++n) imbalance += s.at(n) ? -1 : 1;
        i64 total = 0;
        for (i64 v : autocorrelation_profile(s).values) total += v;
        CHECK(total == imbalance * imbalance);
    }
}

TEST_CASE("cross-correlation is shift-covariant") {
    std::mt19937 rng(311);
    for (int trial = 0; trial < 25; ++trial) {
        u64 N = 6 + rng() % 60;
        SymbolSequence a = random_bits(N, rng), b = random_bits(N, rng);
        u64 e = rng() % N;
        SymbolSequence be = left_cyclic_shift(b, e);
        for (u64 tau = 0; tau < N; ++tau)
            CHECK(cross_correlation(a, be, static_cast<i64>(tau)) ==
                  cross_correlation(a, b, static_cast<i64>(tau + e)));
    }
}

TEST_CASE("profile CSV output") {
    SymbolSequence s(2, std::vector<u32>{0, 1, 1, 0});
    CorrelationProfile prof = autocorrelation_profile(s);
    CHECK(profile_to_csv(prof) == "tau,value\n0,4\n1,0\n2,-4\n3,0\n");
    CHECK(prof.distribution == std::vector<std::pair<i64, u64>>{{-4, 1}, {0, 2}, {4, 1}});
}

TEST_CASE("correlation rejects unusable input") {
    SymbolSequence a(2, std::vector<u32>{0, 1, 1});
    SymbolSequence b(2, std::vector<u32>{0, 1});
    CHECK_THROWS_AS(cross_correlation(a, b, 0), std::invalid_argument);
    SymbolSequence t(3, std::vector<u32>{0, 1, 2});
    CHECK_THROWS_AS(autocorrelation_profile(t), std::invalid_argument);
    CHECK_THROWS_AS(cross_correlation(t, t, 0), std::invalid_argument);
}
