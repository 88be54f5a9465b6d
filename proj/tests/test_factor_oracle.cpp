#include <gtest/gtest.h>

#include "support.hpp"

using namespace sumprod;
using namespace testing_support;

TEST(FactorOracle, Examples) {
    EXPECT_TRUE(factor_oracle(poly("(x+y)^2-1", 5), 2));
    EXPECT_FALSE(factor_oracle(poly("x+y-1", 5), 2));
    EXPECT_FALSE(factor_oracle(poly("x^2+y^2-1", 5), 2));
}

TEST(FactorOracle, FindsFactorsOnlyOverExtensions) {
    // x^2 + y^2 = (x + i y)(x - i y) needs i, absent from F_7.
    const auto P = poly("x^2+y^2", 7);
    EXPECT_FALSE(factor_oracle(P, 1));
    const auto w = FactorOracle(make_prime(7), 2).find_factor(P);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->extension_degree, 2u);
    EXPECT_EQ(w->factor.total_degree(), 1);
    // x^3 - 2 is irreducible over F_7 and F_49 and splits over F_343.
    EXPECT_FALSE(factor_oracle(poly("x^3+5", 7), 2));
    EXPECT_TRUE(factor_oracle(poly("x^3+5", 7), 3));
}

TEST(FactorOracle, RejectsLargeDegrees) { EXPECT_THROW((void)factor_oracle(poly("x^5+y", 5), 1), Error); }

// A witness g must satisfy: Q vanishes wherever g does, over its field of definition.
TEST(FactorOracle, WitnessZeroSetsAreContained) {
    const FactorOracle oracle(make_prime(5), 2);
    for (const char* text : {"(x+y)^2-1", "x^2+y^2", "x*y+x+y+1", "(x+2*y+1)*(x^2+y+3)", "x^2-2", "x^3*y+x*y^3"}) {
        const auto Q = poly(text, 5);
        const auto w = oracle.find_factor(Q);
        ASSERT_TRUE(w.has_value()) << text;
        const auto K = ext_field(make_prime(5), w->extension_degree);
        const auto QK = Q.lifted(K);
        EXPECT_GT(w->factor.total_degree(), 0);
        EXPECT_LT(w->factor.total_degree(), Q.total_degree());
        for (u64 a = 0; a < K.order(); ++a)
            for (u64 b = 0; b < K.order(); ++b)
                if (w->factor.eval(a, b) == K.zero()) {
                    ASSERT_EQ(QK.eval(a, b), K.zero()) << text;
                }
    }
}

TEST(FactorOracle, NoFalsePositivesOnIrreducibleCurves) {
    for (const char* text : {"x^2+y^2-1", "x^3+y^3-1", "x^2*y+y^2+x+1", "x^3+y^2+1", "x*y-1"})
        EXPECT_FALSE(factor_oracle(poly(text, 7), 2)) << text;
}

// Small slice of the criterion-versus-oracle equivalence: every homogeneous
// quadratic over F_3.
TEST(FactorOracle, AgreesWithProperPowerCriterionOnQuadratics) {
    const FactorOracle oracle(make_prime(3), 3);
    const auto F = PrimeField(make_prime(3));
    for (u64 idx = 1; idx < 27; ++idx) {
        FpPoly h(F);
        u64 v = idx;
        for (int i = 0; i <= 2; ++i, v /= 3) h = h + FpPoly::monomial(F, v % 3, i, 2 - i);
        EXPECT_EQ(abs_irreducible_shift(h, u64{1}), !oracle.has_factor(h.shifted(1))) << h.to_string();
    }
}
