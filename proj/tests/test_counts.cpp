#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hyperpascal/counts.hpp"
#include "hyperpascal/verify.hpp"

using namespace hyperpascal;

TEST_CASE("census recurrence reproduces the frozen table") {
    auto rows = count_vectors(10);
    const TableFixture& t = expected_counts_table();
    CHECK(rows[0].s == 1);
    CHECK(rows[4].a == 12);
    CHECK(rows[4].b == 12);
    CHECK(rows[4].c == 3);
    CHECK(rows[4].d == 3);
    CHECK(rows[4].e == 3);
    CHECK(rows[4].s == 36);
    CHECK(rows[10].s == 2190651);
    CHECK(rows[10].e == 1474773);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(rows[n].a == Int(t[0][n]));
        CHECK(rows[n].s == Int(t[5][n]));
    }
}

TEST_CASE("value-sum recurrence reproduces the frozen table") {
    auto rows = sum_vectors(10);
    CHECK(rows[1].a == 0);
    CHECK(rows[1].s == 3);
    CHECK(rows[5].a == 174);
    CHECK(rows[5].b == 114);
    CHECK(rows[5].c == 210);
    CHECK(rows[5].d == 324);
    CHECK(rows[5].e == 312);
    CHECK(rows[5].s == 1137);
    CHECK(rows[10].s == 102049197);
}

TEST_CASE("value sums are nonnegative and strictly increasing") {
    auto rows = sum_vectors(40);
    for (unsigned n = 0; n <= 40; ++n) {
        CHECK(rows[n].a >= 0);
        CHECK(rows[n].b >= 0);
        CHECK(rows[n].c >= 0);
        CHECK(rows[n].d >= 0);
        CHECK(rows[n].e >= 0);
        if (n >= 1) CHECK(rows[n].s > rows[n - 1].s);
    }
}

TEST_CASE("closed forms agree with the recurrences") {
    CHECK(explicit_count(CountKind::A, 2) == 3);
    CHECK(explicit_count(CountKind::S, 2) == 6);
    CHECK(explicit_count(CountKind::S, 0) == 1);
    auto counts = count_vectors(50);
    for (unsigned n = 1; n <= 50; ++n) {
        CHECK(explicit_count(CountKind::A, n) == counts[n].a);
        CHECK(explicit_count(CountKind::B, n) == counts[n].b);
        CHECK(explicit_count(CountKind::C, n) == counts[n].c);
        CHECK(explicit_count(CountKind::D, n) == counts[n].d);
        CHECK(explicit_count(CountKind::E, n) == counts[n].e);
        CHECK(explicit_count(CountKind::S, n) == counts[n].s);
    }
}

TEST_CASE("face value-sum closed forms") {
    CHECK(explicit_sum_ab(CountKind::A, 3) == 18);
    CHECK(explicit_sum_ab(CountKind::A, 2) == 6);
    CHECK(explicit_sum_ab(CountKind::B, 2) == 0);
    CHECK_THROWS_AS(explicit_sum_ab(CountKind::C, 2), std::invalid_argument);
    auto sums = sum_vectors(50);
    for (unsigned n = 1; n <= 50; ++n) {
        CHECK(explicit_sum_ab(CountKind::A, n) == sums[n].a);
        CHECK(explicit_sum_ab(CountKind::B, n) == sums[n].b);
    }
}

TEST_CASE("delta coefficients recovered from exact data") {
    SumExplicitModel model = build_sum_model(256);
    // the three cubic roots, isolated rigorously
    CHECK(model.root6.width() <= make_rat(Int(1), pow10(20)));
    double a4 = mpf_get_d(model.alpha4.get_mpf_t());
    double a5 = mpf_get_d(model.alpha5.get_mpf_t());
    double a6 = mpf_get_d(model.alpha6.get_mpf_t());
    CHECK(a4 == doctest::Approx(0.240683).epsilon(1e-5));
    CHECK(a5 == doctest::Approx(2.408387).epsilon(1e-5));
    CHECK(a6 == doctest::Approx(10.350930).epsilon(1e-5));
    double d4 = mpf_get_d(model.delta4.get_mpf_t());
    double d5 = mpf_get_d(model.delta5.get_mpf_t());
    double d6 = mpf_get_d(model.delta6.get_mpf_t());
    CHECK(std::abs(d4 - 1.137480) < 5e-7);
    CHECK(std::abs(d5 - (-0.144699)) < 5e-7);
    CHECK(std::abs(d6 - 0.007219) < 5e-7);
}

TEST_CASE("numeric total value sum matches the exact engine") {
    auto sums = sum_vectors(10);
    Real total = explicit_sum_total(10, 256);
    Real exact(sums[10].s, 384);
    Real rel(0, 384);
    rel = abs(total - exact) / exact;
    Real bound = real_pow10(-20, 384);
    CHECK(rel < bound);
}

TEST_CASE("growth ratios approach the dominant roots") {
    unsigned prec = 256;
    Real counts_ratio = growth_ratio(RatioKind::Counts, 25, prec);
    Real target(4, prec);
    target += real_sqrt_ui(15, prec);
    CHECK(real_abs(counts_ratio - target) < real_pow10(-8, prec));

    SumExplicitModel model = build_sum_model(prec);
    Real sums_ratio = growth_ratio(RatioKind::Sums, 30, prec);
    CHECK(real_abs(sums_ratio - model.alpha6) < real_pow10(-8, prec));

    // ratios settle into the dominant-root window quickly
    for (unsigned n = 10; n <= 20; ++n) {
        Real ratio = growth_ratio(RatioKind::Counts, n, prec);
        CHECK(ratio > Real(7.8, prec));
        CHECK(ratio < Real(7.95, prec));
    }
}

TEST_CASE("euclidean degeneration") {
    auto rows = euclidean_counts(20);
    CHECK(rows[1].a == 0);
    CHECK(rows[1].s == 3);
    CHECK(rows[4].a == 9);
    CHECK(rows[4].c == 3);
    CHECK(rows[4].s == 15);
    CHECK(rows[10].s == 66);
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(rows[n].a == Int(n == 0 ? 0 : 3 * (n - 1)));
        CHECK(rows[n].s == Int((n + 1) * (n + 2) / 2));
    }
    // ratio (n+2)/n tends to 1
    Real ratio = growth_ratio(RatioKind::EuclideanCounts, 200, 128);
    CHECK(real_abs(ratio - Real(1, 128)) < Real(0.02, 128));
}

TEST_CASE("csv emission is stable") {
    std::ostringstream out;
    write_counts_csv(out, count_vectors(2));
    CHECK(out.str() == "n,a,b,c,d,e,s\n0,0,0,0,0,0,1\n1,0,0,0,0,0,3\n2,3,0,0,0,0,6\n");
}
