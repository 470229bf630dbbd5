#include <catch2/catch.hpp>

#include "geomseq/report.hpp"
#include "geomseq/theorems.hpp"

using namespace geomseq;

namespace {

u32 smallest_nonresidue(u32 p) {
    for (u32 a = 2; a < p; ++a)
        if (legendre_symbol(a, p) == -1) return a;
    FAIL("no nonresidue");
    return 0;
}

} // namespace

TEST_CASE("mod underline takes representatives in 1..n") {
    CHECK(mod_underline(-9, 9) == 9);
    CHECK(mod_underline(1, 9) == 1);
    CHECK(mod_underline(0, 5) == 5);
    CHECK(mod_underline(9, 9) == 9);
    CHECK(mod_underline(10, 9) == 1);
    CHECK(mod_underline(-1, 4) == 3);
}

TEST_CASE("interleaved gcd quantities") {
    // N = 288 = 2^5 * 9, odd part 9
    CHECK(interleaved_gcd_G(288, 5) == 9);
    CHECK(interleaved_gcd_G(288, 2) == 3);
    CHECK(interleaved_gcd_G(288, 8) == 3);
    CHECK(interleaved_gcd_G(288, 0) == 1);
    // N = 342, nu = 57: the two tabulated residue classes
    CHECK(interleaved_gcd_H0(57, 86) == 57);
    CHECK(interleaved_gcd_H1(342, 86) == 171);
    CHECK(interleaved_gcd_H0(57, 5) == 3);
    CHECK(interleaved_gcd_H1(342, 5) == 9);
    CHECK(two_adic_valuation(288) == 5);
    CHECK(two_adic_valuation(342) == 1);
}

TEST_CASE("qualifying decompositions p = 2^s r + 1") {
    auto c23 = large_lc_conditions(23);
    REQUIRE(c23.has_value());
    CHECK(c23->s == 1);
    CHECK(c23->r == 11);
    auto c11 = large_lc_conditions(11);
    REQUIRE(c11.has_value());
    CHECK(c11->s == 1);
    CHECK(c11->r == 5);
    CHECK_FALSE(large_lc_conditions(7).has_value());   // r = 3 < sqrt(7)+1
    CHECK_FALSE(large_lc_conditions(29).has_value());  // 2 has order 3 mod 7
    CHECK_FALSE(large_lc_conditions(17).has_value());  // no odd prime r
    CHECK_FALSE(large_lc_conditions(13).has_value());  // r = 3 < sqrt(13)+1
}

TEST_CASE("product rule for A in D_0 and A = 0") {
    ExtField F = ExtField::with_default_poly(7, 2);
    Prediction pr = chan_games_check(F, 2, 1);
    CHECK(pr.status == PredictionStatus::verified);
    CHECK(*pr.predicted_lc == *pr.measured_lc);

    // residue A other than 1 also checks the reduction to A = 1
    Prediction pr2 = chan_games_check(F, 2, 2);
    CHECK(pr2.status == PredictionStatus::verified);
    CHECK(pr2.detail == "lc(T_A) = lc(T_1)");

    // A = 0 attains 2*nu
    ExtField G(3, 2, {2, 2, 1});
    Prediction pr0 = chan_games_check(G, 2, 0);
    CHECK(pr0.status == PredictionStatus::verified);
    CHECK(*pr0.measured_lc == 2 * G.nu());

    // ternary
    ExtField H = ExtField::with_default_poly(7, 2);
    Prediction pr3 = chan_games_check(H, 3, 1);
    CHECK(pr3.status == PredictionStatus::verified);

    CHECK_THROWS_AS(chan_games_check(F, 2, 3), std::invalid_argument); // 3 not in D_0 mod 7
}

TEST_CASE("nu examples") {
    CHECK(ExtField::with_default_poly(29, 3).nu() == 871);
    CHECK(ExtField::with_default_poly(43, 3).nu() == 1893);
    CHECK(ExtField::with_default_poly(47, 3).nu() == 2257);
}

TEST_CASE("nonresidue rules at desk scale") {
    // p = 1 (mod 4): plain product rule
    {
        ExtField F = ExtField::with_default_poly(5, 2);
        u32 A = smallest_nonresidue(5);
        auto base = measure_base(F, 2, A);
        Prediction pr = lc_predict_nonresidue(5, 2, 2, 1, base.t.linear_complexity, base.T.linear_complexity);
        CHECK(pr.applicability == "product_rule");
        CHECK(pr.status == PredictionStatus::verified);
    }
    // p = 7 (mod 8), m odd: nu(L(t)-1)+1
    {
        ExtField F = ExtField::with_default_poly(7, 3);
        auto base = measure_base(F, 2, 3);
        CHECK(base.t.linear_complexity == 5);
        CHECK(base.T.linear_complexity == 229);
        Prediction pr = lc_predict_nonresidue(7, 3, 2, 1, 5, 229);
        CHECK(pr.applicability == "offset_rule_7mod8");
        CHECK(*pr.predicted_lc == 57 * 4 + 1);
        CHECK(pr.status == PredictionStatus::verified);
    }
    // p = 3 (mod 8), m odd: nu(L(t)+1)-1
    {
        ExtField F = ExtField::with_default_poly(11, 3);
        u32 A = smallest_nonresidue(11);
        auto base = measure_base(F, 2, A);
        Prediction pr =
            lc_predict_nonresidue(11, 3, 2, 1, base.t.linear_complexity, base.T.linear_complexity);
        CHECK(pr.applicability == "offset_rule_3mod8");
        CHECK(pr.status == PredictionStatus::verified);
    }
    // m even: conjecture branch, reported with its own status
    {
        ExtField F = ExtField::with_default_poly(11, 2);
        u32 A = smallest_nonresidue(11);
        auto base = measure_base(F, 2, A);
        Prediction pr =
            lc_predict_nonresidue(11, 2, 2, 1, base.t.linear_complexity, base.T.linear_complexity);
        CHECK(pr.applicability == "even_m_conjecture_3mod8");
        CHECK((pr.status == PredictionStatus::conjecture_verified ||
               pr.status == PredictionStatus::conjecture_violated));
        CHECK(pr.status == PredictionStatus::conjecture_verified);
    }
    // ternary alphabet: product rule regardless of p mod 4
    {
        ExtField F = ExtField::with_default_poly(7, 2);
        Cyclotomy C(7, 3, F.g());
        u32 A = 0;
        for (u32 a = 1; a < 7; ++a)
            if (C.class_index(a) != 0) {
                A = a;
                break;
            }
        auto base = measure_base(F, 3, A);
        Prediction pr = lc_predict_nonresidue(7, 2, 3, C.class_index(A), base.t.linear_complexity,
                                              base.T.linear_complexity);
        CHECK(pr.applicability == "product_rule");
        CHECK(pr.status == PredictionStatus::verified);
    }
    CHECK_THROWS_AS(lc_predict_nonresidue(7, 2, 2, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("explicit minimal polynomials under a qualifying decomposition (p=11)") {
    ExtField F = ExtField::with_default_poly(11, 2);
    auto cond = large_lc_conditions(11);
    REQUIRE(cond.has_value());
    auto base = measure_base(F, 2, 1);
    auto rows = min_poly_predict(11, 2, 1, cond->s, cond->r, base.t, base.T);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) CHECK(r.status == PredictionStatus::verified);
    CHECK(rows[0].quantity == Quantity::lc_t);
    CHECK(*rows[0].predicted_lc == 10);
    CHECK(*rows[1].predicted_lc == 120);
    CHECK(*rows[2].predicted_poly == "x^10 + 1");

    // A outside both cases is withheld
    auto none = min_poly_predict(11, 2, 3, cond->s, cond->r, base.t, base.T); // 3 is a QR mod 11, != 1
    REQUIRE(none.size() == 1);
    CHECK(none[0].status == PredictionStatus::hypothesis_not_met);
}

TEST_CASE("interleaved autocorrelation predictor matches measurement") {
    struct Tuple {
        u32 p, m, A;
        u64 e;
        bool merged;
    };
    for (Tuple t : {Tuple{7, 2, 3, 2, false}, Tuple{5, 3, 2, 16, true}, Tuple{5, 3, 2, 6, false},
                    Tuple{3, 2, 2, 2, false}, Tuple{7, 2, 1, 5, false}, Tuple{13, 2, 2, 9, false}}) {
        ExtField F = ExtField::with_default_poly(t.p, t.m);
        const u64 N = F.q() - 1;
        // merged case fires iff 2e = 1 + j*nu (mod N) for some j
        bool has_j0 = false;
        for (u32 j = 1; j <= t.p - 2; ++j)
            if ((2 * t.e) % N == (1 + u64{j} * F.nu()) % N) has_j0 = true;
        CHECK(has_j0 == t.merged);
        CHECK(acf_predict_interleaved(F, t.A, t.e, 0) == 2 * static_cast<i64>(N));
        SymbolSequence Se = proposed_sequence(F, 2, t.A, t.e);
        Prediction pr = acf_check_interleaved(F, t.A, t.e, autocorrelation_profile(Se));
        INFO("p=" << t.p << " m=" << t.m << " A=" << t.A << " e=" << t.e << " :: " << pr.detail);
        CHECK(pr.status == PredictionStatus::verified);
    }
}

TEST_CASE("odd-shift predictor equals the decomposition route") {
    // the two formulations of the odd-shift value must agree, merged case
    // included
    for (auto [p, m, A, e] : std::vector<std::array<u64, 4>>{{7, 2, 3, 2}, {5, 3, 2, 16}, {5, 3, 2, 100}}) {
        ExtField F = ExtField::with_default_poly(static_cast<u32>(p), static_cast<u32>(m));
        TAutocorrelationLaw law = t_autocorrelation_law(F, static_cast<u32>(A));
        const u64 N = F.q() - 1;
        for (u64 tau0 = 0; tau0 < N; ++tau0) {
            i64 via_law = -law.value_at(mod_floor(static_cast<i64>(e + tau0), N)) -
                          law.value_at(mod_floor(static_cast<i64>(e) - static_cast<i64>(tau0) - 1, N));
            CHECK(acf_predict_interleaved(F, static_cast<u32>(A), e, 2 * tau0 + 1) == via_law);
        }
    }
}

TEST_CASE("cross-correlation of distinct interleaves decomposes") {
    ExtField F = ExtField::with_default_poly(7, 2);
    CHECK(r_decomposition_holds(F, 3, 2, 5));
    CHECK(r_decomposition_holds(F, 1, 0, 7));
    ExtField G = ExtField::with_default_poly(5, 3);
    CHECK(r_decomposition_holds(G, 2, 0, 16));
}

TEST_CASE("interleaved linear complexity, max-lc route (p=17)") {
    ExtField F = ExtField::with_default_poly(17, 2);
    u32 A = smallest_nonresidue(17);
    auto base = measure_base(F, 2, A);
    REQUIRE(base.T.linear_complexity == 288); // the property case 1 rests on
    auto lc_at = [&](u64 e) {
        SymbolSequence Se = proposed_sequence(F, 2, A, e);
        auto rows = lc_predict_interleaved(F, A, e, base.T, minimal_poly_gcd(Se));
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].applicability == "interleaved_max_lc:measured");
        CHECK(rows[0].status == PredictionStatus::verified);
        CHECK(rows[1].status == PredictionStatus::verified);
        return *rows[0].measured_lc;
    };
    CHECK(lc_at(5) == 567);
    CHECK(lc_at(14) == 567);
    CHECK(lc_at(2) == 573);
    CHECK(lc_at(8) == 573);
    CHECK(lc_at(0) == 575);
    CHECK(lc_at(1) == 575);
}

TEST_CASE("interleaved linear complexity, near-max route (p=7, m=3)") {
    ExtField F = ExtField::with_default_poly(7, 3);
    auto base = measure_base(F, 2, 3);
    REQUIRE(base.T.linear_complexity == 229);
    auto run = [&](u64 e) {
        SymbolSequence Se = proposed_sequence(F, 2, 3, e);
        auto rows = lc_predict_interleaved(F, 3, e, base.T, minimal_poly_gcd(Se));
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].applicability == "interleaved_near_max_lc:measured");
        CHECK(rows[0].status == PredictionStatus::verified);
        CHECK(rows[1].status == PredictionStatus::verified);
        return std::make_pair(*rows[0].measured_lc, rows[0].detail);
    };
    auto [l86, d86] = run(86);
    CHECK(l86 == 344);
    CHECK(d86 == "H0=57 H1=171");
    auto [l5, d5] = run(5);
    CHECK(l5 == 452);
    CHECK(d5 == "H0=3 H1=9");
    auto [l0, d0] = run(0);
    CHECK(l0 == 458);
}

TEST_CASE("interleaved bounds and attainment in the max-lc case") {
    ExtField F(3, 2, {2, 2, 1});
    auto base = measure_base(F, 2, 1);
    REQUIRE(base.T.linear_complexity == 8);
    // N = 8 has odd part 1, so L(S^e) = 2N - 1 for every e
    for (u64 e : {0ull, 2ull, 5ull}) {
        SymbolSequence Se = proposed_sequence(F, 2, 1, e);
        auto rows = lc_predict_interleaved(F, 1, e, base.T, minimal_poly_gcd(Se));
        CHECK(*rows[0].predicted_lc == 15);
        CHECK(rows[0].status == PredictionStatus::verified);
        CHECK(rows[0].detail.find("upper_bound_attained") != std::string::npos);
        CHECK(rows[0].detail.find("lower_bound_attained") != std::string::npos); // odd part 1: both coincide
    }
    // p=17: bounds 2N - 9 <= L <= 2N - 1; e = 5 mod 9 attains the lower bound
    ExtField G = ExtField::with_default_poly(17, 2);
    u32 A = smallest_nonresidue(17);
    auto gbase = measure_base(G, 2, A);
    SymbolSequence S5 = proposed_sequence(G, 2, A, 5);
    auto rows5 = lc_predict_interleaved(G, A, 5, gbase.T, minimal_poly_gcd(S5));
    CHECK(rows5[0].detail.find("lower_bound_attained") != std::string::npos);
    CHECK(*rows5[0].measured_lc == 2 * 288 - 288 / 32);
    SymbolSequence S0 = proposed_sequence(G, 2, A, 0);
    auto rows0 = lc_predict_interleaved(G, A, 0, gbase.T, minimal_poly_gcd(S0));
    CHECK(rows0[0].detail.find("upper_bound_attained") != std::string::npos);
    CHECK(*rows0[0].measured_lc == 2 * 288 - 1);
}

TEST_CASE("interleaved prediction is withheld outside both cases") {
    // p = 13, m = 2, nonresidue A: no qualifying decomposition and the
    // measured L(T) falls short of N, so no formula applies
    ExtField F = ExtField::with_default_poly(13, 2);
    u32 A = smallest_nonresidue(13);
    auto base = measure_base(F, 2, A);
    REQUIRE(base.T.linear_complexity < F.q() - 1);
    SymbolSequence Se = proposed_sequence(F, 2, A, 3);
    auto rows = lc_predict_interleaved(F, A, 3, base.T, minimal_poly_gcd(Se));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == PredictionStatus::hypothesis_not_met);
}

TEST_CASE("tuple verifier assembles and routes totally") {
    for (auto [p, m] : std::vector<std::pair<u32, u32>>{{5, 2}, {7, 2}, {11, 2}, {7, 3}}) {
        ExtField F = ExtField::with_default_poly(p, m);
        for (u32 A = 0; A < p; ++A) {
            auto rows = verify_tuple(F, 2, A, A % 2 ? std::optional<u64>{3} : std::nullopt);
            int lc_T_rows = 0;
            bool violated = false;
            for (const auto& r : rows) {
                if (r.quantity == Quantity::lc_T && r.status != PredictionStatus::hypothesis_not_met)
                    ++lc_T_rows;
                if (r.status == PredictionStatus::violated) violated = true;
            }
            INFO("p=" << p << " m=" << m << " A=" << A);
            CHECK(lc_T_rows >= 1); // exactly one primary rule fired, plus corollary rows when they apply
            CHECK_FALSE(violated);
        }
    }
}

TEST_CASE("verifier cross-checks double-firing predictors (p=23, A=1)") {
    // chan_games and the max-lc corollary both fire here and agree
    ExtField F = ExtField::with_default_poly(23, 2);
    auto rows = verify_tuple(F, 2, 1, std::nullopt);
    int fired = 0;
    for (const auto& r : rows)
        if (r.quantity == Quantity::lc_T && r.predicted_lc && r.status == PredictionStatus::verified) ++fired;
    CHECK(fired == 2);
}

TEST_CASE("report rendering") {
    ExtField F = ExtField::with_default_poly(7, 2);
    auto rows = verify_tuple(F, 2, 3, std::optional<u64>{2});
    std::vector<ReportRow> rr;
    for (const auto& pr : rows) rr.push_back(make_report_row(7, 2, 2, 3, 2, pr));
    std::string csv = report_csv(rr);
    CHECK(csv.rfind("p,m,ell,A,e,quantity,applicability,predicted,measured,status,detail\n", 0) == 0);
    CHECK(csv.find("lc_T") != std::string::npos);
    CHECK(csv.find("verified") != std::string::npos);
    std::string table = report_table(rr);
    CHECK(table.find("quantity") != std::string::npos);
    // CSV cells stay comma-free
    std::size_t lines = 0;
    for (std::size_t pos = 0; (pos = csv.find('\n', pos)) != std::string::npos; ++pos) ++lines;
    std::size_t commas = 0;
    for (char c : csv) commas += c == ',';
    CHECK(commas == lines * 10);
}
