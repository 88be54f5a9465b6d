#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace sumprod;
using namespace testing_support;

TEST(ExtField, NineElements) {
    const auto F = ext_field(make_prime(3), 2);
    EXPECT_EQ(F.order(), 9u);
    EXPECT_EQ(F.characteristic(), 3u);
    // x^2 + 1, coefficients low to high
    EXPECT_EQ(F.modulus(), uni({1, 0, 1}, 3));
}

TEST(ExtField, RejectsCharacteristicTwo) { EXPECT_THROW((void)ext_field(make_prime(2), 2), Error); }

TEST(ExtField, RejectsOversizedFields) {
    try {
        (void)ext_field(make_prime(101), 3, 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
    }
    EXPECT_THROW((void)ext_field(make_prime(3), 0), Error);
}

// The modulus is the first monic irreducible when (c_0, ..., c_{d-1}) is read
// as a base-p number with the constant term most significant.
TEST(ExtField, ModulusIsSmallestIrreducible) {
    for (u64 p : {3ull, 5ull, 7ull}) {
        for (unsigned d = 1; d <= 4; ++d) {
            const auto F = ext_field(make_prime(p), d);
            std::optional<FpUniPoly> first;
            for (u64 idx = 0; !first; ++idx) {
                std::vector<u64> c(d + 1, 0);
                u64 v = idx;
                for (unsigned k = 0; k < d; ++k) c[d - 1 - k] = v % p, v /= p;
                c[d] = 1;
                if (is_irreducible(uni(c, p))) first = uni(c, p);
            }
            EXPECT_EQ(F.modulus(), *first) << p << "^" << d;
        }
    }
}

TEST(ExtField, FieldAxioms) {
    std::mt19937_64 rng(3);
    for (auto [p, d] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}, {3, 5}}) {
        const auto F = ext_field(make_prime(p), d);
        const u64 q = F.order();
        for (int t = 0; t < 2000; ++t) {
            const u64 a = rng() % q, b = rng() % q, c = rng() % q;
            ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            ASSERT_EQ(F.add(F.sub(a, b), b), a);
            ASSERT_EQ(F.add(a, F.neg(a)), F.zero());
            if (a != 0) {
                ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
                ASSERT_EQ(F.pow(a, q - 1), F.one());
            }
            ASSERT_EQ(F.pow(F.pth_root(a), p), a);
        }
        EXPECT_THROW((void)F.inv(0), Error);
    }
}

TEST(ExtField, PrimeSubfieldEmbeds) {
    const auto F = ext_field(make_prime(7), 2);
    for (i64 a = -10; a < 10; ++a)
        for (i64 b = -10; b < 10; ++b) EXPECT_EQ(F.mul(F.from_int(a), F.from_int(b)), F.from_int(a * b));
}

TEST(ExtField, CoefficientRoundTrip) {
    const auto F = ext_field(make_prime(5), 3);
    for (u64 a = 0; a < F.order(); ++a) EXPECT_EQ(F.from_coeffs(F.coeffs(a)), a);
}
