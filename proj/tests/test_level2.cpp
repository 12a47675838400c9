#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lns/level2.hpp"

using namespace lns;

TEST_CASE("RangeConfig") {
    CHECK_THROWS_AS(RangeConfig(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(RangeConfig(5, -5), std::invalid_argument);
    RangeConfig cfg(-3, 7);
    CHECK(cfg.sentinel() == 8);
    CHECK(in_range(cfg, -3));
    CHECK(in_range(cfg, 7));
    CHECK_FALSE(in_range(cfg, -4));
    CHECK_FALSE(in_range(cfg, 8));
}

TEST_CASE("clip demands operands and result in range") {
    RangeConfig cfg(0, 10);
    CHECK(clip(cfg, 3, 4, 7) == Level2Value{true, 7});
    CHECK(clip(cfg, 3, 4, 11) == Level2Value{false, 11});   // result out
    CHECK(clip(cfg, -1, 4, 3) == Level2Value{false, 11});   // x out
    CHECK(clip(cfg, 3, 12, 3) == Level2Value{false, 11});   // y out
    CHECK(clip(cfg, 3, 4, -2) == Level2Value{false, 11});
}

TEST_CASE("ops clip their level-1 results") {
    RangeConfig cfg(0, 10);
    CHECK(mult_level_2(cfg, 3, 4) == Level2Value{true, 7});
    CHECK(mult_level_2(cfg, 6, 6) == Level2Value{false, 11});
    CHECK(div_level_2(cfg, 7, 4) == Level2Value{true, 3});
    CHECK(div_level_2(cfg, 3, 4) == Level2Value{false, 11});  // -1 below min

    SumTable t = build_table(Base(3, 2));
    CHECK(add_level_2(cfg, t, 0, 0) == Level2Value{true, 1});
    CHECK(add_level_2(cfg, t, 10, 10) == Level2Value{false, 11});  // S pushes past max
    CHECK(add_level_2(cfg, t, 0, 11) == Level2Value{false, 11});   // poisoned operand
}

TEST_CASE("in-range results agree with level 1 and imply in-range operands") {
    std::mt19937_64 rng(37);
    auto draw = [&](long lo, long hi) {
        return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
    };
    SumTable t = build_table(Base(4, 3));
    for (int i = 0; i < 400; ++i) {
        long mn = draw(-15, 0), mx = draw(1, 20);
        RangeConfig cfg(mn, mx);
        Int x = draw(mn - 8, mx + 8), y = draw(mn - 8, mx + 8);
        struct Case {
            Level2Value got;
            Int level1;
        };
        Case cases[] = {
            {mult_level_2(cfg, x, y), mult_level_1(Rep{x}, Rep{y}).z},
            {div_level_2(cfg, x, y), div_level_1(Rep{x}, Rep{y}).z},
            {add_level_2(cfg, t, x, y), add_level_1(t, Rep{x}, Rep{y}).z},
        };
        for (const Case& c : cases) {
            if (c.got.in_range) {
                CHECK(c.got.z == c.level1);
                CHECK(in_range(cfg, x));
                CHECK(in_range(cfg, y));
            } else {
                CHECK(c.got.z == cfg.sentinel());
            }
        }
    }
}

TEST_CASE("the sentinel poisons whole chains") {
    SumTable t = build_table(Base(3, 2));
    RangeConfig cfg(0, 10);
    Level2Value v = mult_level_2(cfg, 6, 6);  // 12: out
    REQUIRE_FALSE(v.in_range);
    v = add_level_2(cfg, t, v.z, 2);
    CHECK_FALSE(v.in_range);
    v = div_level_2(cfg, v.z, 3);
    CHECK_FALSE(v.in_range);
    CHECK(v.z == 11);

    // a sentinel can never be rescued into range
    v = div_level_2(cfg, 11, 11);  // 0 would be in range, but operands are not
    CHECK_FALSE(v.in_range);
}
