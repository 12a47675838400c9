#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lns/exactq.hpp"

using namespace lns;

TEST_CASE("PosRational rejects zero and negatives") {
    CHECK_THROWS_AS(PosRational(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(PosRational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(PosRational(-2, 3), std::invalid_argument);
    CHECK_THROWS_AS(PosRational(2, -3), std::invalid_argument);
    PosRational v(2, 3);
    PosRational r = v.reciprocal();
    CHECK(r.num == 3);
    CHECK(r.den == 2);
}

TEST_CASE("Base requires b > 1; axiom (1) is checked separately") {
    CHECK_THROWS_AS(Base(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Base(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Base(3, 0), std::invalid_argument);

    CHECK(Base(3, 2).satisfies_axiom1());
    CHECK(Base(1025, 1024).satisfies_axiom1());
    CHECK_FALSE(Base(3, 1).satisfies_axiom1());   // q = 1
    CHECK_FALSE(Base(4, 2).satisfies_axiom1());   // p = 2q
    CHECK_FALSE(Base(5, 2).satisfies_axiom1());   // p > 2q
    CHECK_NOTHROW(Base(3, 2).require_axiom1("t"));
    CHECK_THROWS_AS(Base(4, 2).require_axiom1("t"), std::domain_error);
}

TEST_CASE("cmp_pow pinned comparisons, base 3/2") {
    Base b(3, 2);
    PosRational two(2, 1);
    CHECK(cmp_pow(two, b, 1) == Ordering::Greater);  // 2 > 3/2
    CHECK(cmp_pow(two, b, 2) == Ordering::Less);     // 2 < 9/4
    CHECK(cmp_pow(PosRational(9, 4), b, 2) == Ordering::Equal);
    CHECK(cmp_pow(PosRational(1, 1), b, 0) == Ordering::Equal);

    // negative exponents: (3/2)^-2 = 4/9
    CHECK(cmp_pow(PosRational(1, 2), b, -2) == Ordering::Greater);
    CHECK(cmp_pow(PosRational(4, 9), b, -2) == Ordering::Equal);
    CHECK(cmp_pow(PosRational(1, 3), b, -2) == Ordering::Less);
}

TEST_CASE("cmp_pow is reduction-invariant") {
    Base b(7, 5);
    PosRational v(13, 6);
    for (int e = -5; e <= 5; ++e) {
        PosRational scaled(13 * 97, 6 * 97);
        CHECK(cmp_pow(v, b, e) == cmp_pow(scaled, b, e));
    }
}

TEST_CASE("cmp_pow agrees with direct rational arithmetic") {
    std::mt19937_64 rng(7);
    auto draw = [&](long lo, long hi) {
        return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
    };
    for (int i = 0; i < 300; ++i) {
        long q = draw(2, 40);
        Base base(q + draw(1, 6), q);
        PosRational v(draw(1, 5000), draw(1, 5000));
        Int e = draw(-12, 12);
        mpq_class lhs(v.num, v.den);
        mpq_class pw(base.p, base.q);
        mpq_class rhs = 1;
        for (Int k = 0; k < abs(e); ++k) rhs *= pw;
        if (e < 0) rhs = 1 / rhs;
        int c = cmp(lhs, rhs);
        Ordering want = c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
        CHECK(cmp_pow(v, base, e) == want);
    }
}

TEST_CASE("in_closed_interval") {
    Base b(3, 2);
    PosRational two(2, 1);
    CHECK(in_closed_interval(two, b, 1, 2));        // 3/2 <= 2 <= 9/4
    CHECK_FALSE(in_closed_interval(two, b, 2, 3));  // 2 < 9/4
    CHECK(in_closed_interval(PosRational(9, 4), b, 2, 2));
    CHECK_THROWS_AS(in_closed_interval(two, b, 2, 1), std::invalid_argument);
}

TEST_CASE("comparison predicate quartet matches cmp_pow") {
    Base b(4, 3);
    for (long n = 1; n <= 9; ++n) {
        PosRational v(n, 3);
        for (Int e = -3; e <= 3; ++e) {
            Ordering c = cmp_pow(v, b, e);
            CHECK(l_lessp(v, b, e) == (c == Ordering::Less));
            CHECK(l_geq(v, b, e) == (c != Ordering::Less));
            CHECK(r_lessp(v, b, e) == (c == Ordering::Greater));
            CHECK(r_geq(v, b, e) == (c != Ordering::Greater));
        }
    }
}

TEST_CASE("pow_rational") {
    Base b(3, 2);
    PosRational v = pow_rational(b, 3);
    CHECK(v.num == 27);
    CHECK(v.den == 8);
    v = pow_rational(b, -2);
    CHECK(v.num == 4);
    CHECK(v.den == 9);
    v = pow_rational(b, 0);
    CHECK(v.num == 1);
    CHECK(v.den == 1);
}

TEST_CASE("pow_int guard and helpers") {
    CHECK(detail::pow_int(2, 100) == (Int(1) << 100));
    CHECK(detail::pow_int(10, 0) == 1);
    CHECK_THROWS_AS(detail::pow_int(Int(1) << 64, Int(1) << 40), std::runtime_error);
    CHECK_THROWS_AS(detail::pow_int(2, -1), std::overflow_error);
    CHECK(detail::to_ulong(Int(5), "t") == 5);
    CHECK_THROWS_AS(detail::to_ulong(Int(-1), "t"), std::overflow_error);
}

TEST_CASE("log_ratio_estimate keeps relative accuracy near 1") {
    // ln((2^80 + 1) / 2^80) = ln(1 + 2^-80) ~ 2^-80; plain log subtraction
    // would return 0 here.
    Int n = (Int(1) << 80) + 1;
    Int d = Int(1) << 80;
    double got = detail::log_ratio_estimate(n, d);
    double want = std::pow(0.5, 80);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
    CHECK(detail::log_ratio_estimate(d, n) == doctest::Approx(-want).epsilon(1e-12));
    CHECK(detail::log_ratio_estimate(Int(8), Int(1)) == doctest::Approx(std::log(8.0)));
    CHECK(detail::log_ratio_estimate(Int(5), Int(5)) == 0.0);
}
