#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cliffpar;

TEST(PolyGcd, KnownValues) {
    const F2TUField F;
    auto p = [&](const char* s) { return parse_field_element(F, s).num(); };
    EXPECT_EQ(poly_gcd(p("t^2+u^2"), p("t+u")), p("t+u"));
    EXPECT_EQ(poly_gcd(p("t*u"), p("t^2")), p("t"));
    EXPECT_TRUE(poly_gcd(p("t+1"), p("u+1")).is_one());
    EXPECT_EQ(poly_gcd(p("0"), p("t*u+1")), p("t*u+1"));
}

// gcd(g a, g b) must divide both inputs, be divisible by g, and leave
// cofactors whose own gcd is 1; divisibility is decided by the naive model.
TEST(PolyGcd, AgreesWithDivisionOracle) {
    SeededRng rng(21);
    for (int n = 0; n < 300; ++n) {
        auto g = oracle::random_poly(rng, 4, 4);
        auto a = oracle::random_poly(rng, 4, 4);
        auto b = oracle::random_poly(rng, 4, 4);
        if (g.zero() || a.zero() || b.zero()) continue;
        const auto x = g * a, y = g * b;
        const auto d = oracle::from(poly_gcd(oracle::to(x), oracle::to(y)));
        ASSERT_FALSE(d.zero());
        const auto qx = oracle::divide(x, d), qy = oracle::divide(y, d);
        ASSERT_TRUE(qx && qy) << "gcd does not divide its inputs";
        EXPECT_TRUE(oracle::divide(d, g)) << "gcd misses a common factor";
        EXPECT_TRUE(poly_gcd(oracle::to(*qx), oracle::to(*qy)).is_one());
    }
}

TEST(PolyGcd, TryDivideMatchesOracle) {
    SeededRng rng(22);
    for (int n = 0; n < 300; ++n) {
        auto x = oracle::random_poly(rng, 6, 6);
        const auto y = oracle::random_poly(rng, 3, 3);
        if (y.zero()) continue;
        if (n % 2) x = x * y;
        const auto want = oracle::divide(x, y);
        const auto got = try_divide(oracle::to(x), oracle::to(y));
        ASSERT_EQ(want.has_value(), got.has_value());
        if (want) {
            EXPECT_TRUE(oracle::from(*got) == *want);
        }
    }
}
