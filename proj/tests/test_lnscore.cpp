#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lns/lnscore.hpp"

using namespace lns;

TEST_CASE("sez_pq pinned values") {
    CHECK(sez_pq(Base(3, 2)) == 1);
    CHECK(sez_pq(Base(4, 3)) == 3);
    CHECK(sez_pq(Base(1025, 1024)) == 7101);
    // either side of the golden ratio: 8/5 = 1.6 keeps one entry,
    // 13/8 = 1.625 and 19/10 = 1.9 keep none
    CHECK(sez_pq(Base(8, 5)) == 1);
    CHECK(sez_pq(Base(13, 8)) == 0);
    CHECK(sez_pq(Base(19, 10)) == 0);
}

TEST_CASE("st_pq pinned values and domain") {
    Base b(3, 2);
    CHECK(st_pq(0, b) == 1);  // floor(log 2)
    CHECK(st_pq(1, b) == 2);  // floor(log 5/2)
    CHECK_THROWS_AS(st_pq(2, b), std::out_of_range);
    CHECK_THROWS_AS(st_pq(-1, b), std::out_of_range);

    Base c(4, 3);
    CHECK(st_pq(0, c) == 2);
    CHECK(st_pq(1, c) == 2);
    CHECK(st_pq(2, c) == 3);
    CHECK(st_pq(3, c) == 4);
}

TEST_CASE("build_table produces the canonical verified tables") {
    SumTable t = build_table(Base(3, 2));
    CHECK(t.sez == 1);
    REQUIRE(t.st.size() == 2);
    CHECK(t.st[0] == 1);
    CHECK(t.st[1] == 2);
    CHECK(verify_axioms(t).all_pass());

    SumTable u = build_table(Base(4, 3));
    CHECK(u.sez == 3);
    CHECK(u.st == std::vector<Int>{2, 2, 3, 4});

    SumTable w = build_table(Base(1025, 1024));
    CHECK(w.sez == 7101);
    REQUIRE(w.st.size() == 7102);
    CHECK(w.st[0] == 710);
    CHECK(w.st[7101] == 7102);  // st(sez) = sez + 1 always
    CHECK(verify_axioms(w).all_pass());
}

TEST_CASE("build_table per-entry values match the direct definition") {
    for (const Base& b : {Base(4, 3), Base(21, 13), Base(101, 100)}) {
        SumTable t = build_table(b);
        for (Int z = 0; z <= t.sez; ++z)
            CHECK(t.st[z.get_ui()] == st_pq(z, b));
    }
}

TEST_CASE("build_table refuses bases with no valid index") {
    CHECK_THROWS_WITH_AS(build_table(Base(19, 10)),
                         doctest::Contains("axiom (2)"), AxiomError);
    CHECK_THROWS_AS(build_table(Base(13, 8)), AxiomError);
    // axiom (1) violations are a precondition failure, not an AxiomError
    CHECK_THROWS_AS(build_table(Base(4, 2)), std::domain_error);
}

TEST_CASE("verify_axioms flags each kind of breakage") {
    SumTable good = build_table(Base(3, 2));

    SumTable bad = good;
    bad.st[0] = 0;
    AxiomReport r = verify_axioms(bad);
    CHECK_FALSE(r.axiom4.pass);
    CHECK(r.axiom1.pass);
    CHECK_FALSE(r.all_pass());

    bad = good;
    bad.st[1] = 3;  // b^3 = 27/8 > b^1 + 1 = 5/2
    r = verify_axioms(bad);
    CHECK_FALSE(r.axiom5.pass);
    CHECK(r.axiom5.detail.find("z=1") != std::string::npos);

    bad = good;
    bad.st[1] = 1;  // upper bound: b^2 = 9/4 <= 5/2
    CHECK_FALSE(verify_axioms(bad).axiom5.pass);

    bad = good;
    bad.sez = 0;
    bad.st.resize(1);
    CHECK_FALSE(verify_axioms(bad).axiom2.pass);

    bad = good;
    bad.st.push_back(5);  // length no longer sez + 1
    CHECK_FALSE(verify_axioms(bad).axiom5.pass);

    SumTable off{Base(4, 2), 1, {1, 2}};
    CHECK_FALSE(verify_axioms(off).axiom1.pass);
}

TEST_CASE("axioms accept redundant entries past the knee") {
    // For z > sez_pq the sum collapses, st(z) = z, and axioms (3)-(5) stay
    // satisfiable: the canonical length is a choice, not a consequence.
    SumTable t = build_table(Base(3, 2));
    t.sez = 2;
    t.st.push_back(2);
    CHECK(verify_axioms(t).all_pass());
    t.sez = 3;
    t.st.push_back(3);
    CHECK(verify_axioms(t).all_pass());
}

TEST_CASE("s_quantized piecewise shape, base 3/2") {
    SumTable t = build_table(Base(3, 2));
    CHECK(s_quantized(t, -5) == 0);   // far negative: sum is just over b^z
    CHECK(s_quantized(t, -2) == 0);
    CHECK(s_quantized(t, -1) == 1);   // z + st(-z) = -1 + 2
    CHECK(s_quantized(t, 0) == 1);
    CHECK(s_quantized(t, 1) == 2);
    CHECK(s_quantized(t, 2) == 2);    // past sez: identity
    CHECK(s_quantized(t, 100) == 100);
}

TEST_CASE("level-1 ops") {
    SumTable t = build_table(Base(3, 2));
    CHECK(mult_level_1(Rep{2}, Rep{3}) == Rep{5});
    CHECK(mult_level_1(Rep{-4}, Rep{3}) == Rep{-1});
    CHECK(div_level_1(Rep{2}, Rep{3}) == Rep{-1});
    CHECK(add_level_1(t, Rep{0}, Rep{0}) == Rep{1});   // 1 + 1 = 2, floor log 1
    CHECK(add_level_1(t, Rep{5}, Rep{0}) == Rep{5});   // b^5 + 1 stays under b^6
    CHECK(add_level_1(t, Rep{0}, Rep{5}) == Rep{5});   // argument order is immaterial
}

TEST_CASE("exact_rep") {
    Base b(3, 2);
    CHECK(exact_rep(Rep{3}, PosRational(27, 8), b));
    CHECK(exact_rep(Rep{3}, PosRational(54, 16), b));  // unreduced form
    CHECK_FALSE(exact_rep(Rep{1}, PosRational(2, 1), b));
    CHECK(exact_rep(Rep{-2}, PosRational(4, 9), b));
}

TEST_CASE("addition of exact inputs lands on the floor log of the sum") {
    std::mt19937_64 rng(17);
    auto draw = [&] { return static_cast<long>(rng() % 41) - 20; };
    for (const Base& b : {Base(3, 2), Base(4, 3)}) {
        SumTable t = build_table(b);
        for (int i = 0; i < 60; ++i) {
            Int e1 = draw(), e2 = draw();
            PosRational vx = pow_rational(b, e1), vy = pow_rational(b, e2);
            PosRational sum(vx.num * vy.den + vy.num * vx.den, vx.den * vy.den);
            Rep got = add_level_1(t, Rep{e1}, Rep{e2});
            CHECK(got.z == floor_log(sum, b));
        }
    }
}

TEST_CASE("property sweeps pass on valid tables and spot broken ones") {
    SumTable t = build_table(Base(3, 2));
    SweepReport r = check_sum_bound(t, -10, 10, 0);
    CHECK(r.pass);
    CHECK(r.checked == 21);
    CHECK(check_reflection(t, -10, 10, 0).pass);
    CHECK(check_first_difference(t, -10, 10, 0).pass);

    SumTable bad = t;
    bad.st[1] = 1;
    SweepReport br = check_sum_bound(bad, -10, 10, 0);
    CHECK_FALSE(br.pass);
    CHECK(br.first_failure.find("1") != std::string::npos);

    SumTable jump = t;
    jump.st[1] = 3;  // S(1) - S(0) = 2
    CHECK_FALSE(check_first_difference(jump, -3, 3, 0).pass);
    CHECK_FALSE(check_sum_bound(jump, -3, 3, 0).pass);
}

TEST_CASE("sweep cap keeps the selection small but structured") {
    SumTable t = build_table(Base(3, 2));
    SweepReport r = check_sum_bound(t, -100000, 100000, 100);
    CHECK(r.pass);
    CHECK(r.checked <= 100);
    CHECK(r.checked >= 80);
}
