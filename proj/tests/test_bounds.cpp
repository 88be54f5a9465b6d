#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace sumprod;
using namespace testing_support;

TEST(Theorem2Constants, Values) {
    const auto c = theorem2_constants(1);
    EXPECT_EQ(c.c1, 24u);
    EXPECT_EQ(c.c2.num, 1u);
    EXPECT_EQ(c.c2.den, 64000u);
    EXPECT_NEAR(c.power_branch, std::pow(99.0 / 2400.0, 1.5), 1e-15);
    EXPECT_NEAR(c.power_branch, 8.39e-3, 2e-5);
    EXPECT_DOUBLE_EQ(c.c, 1.0 / 64000.0);
    EXPECT_EQ(theorem2_constants(2).c1, 384u);
    for (u64 n = 1; n <= 10; ++n) {
        const auto k = theorem2_constants(n);
        EXPECT_GT(k.c, 0);
        EXPECT_LE(k.c, k.c2.to_double());
    }
    EXPECT_THROW((void)theorem2_constants(0), Error);
}

TEST(ThMapConstants, Values) {
    const auto a = thmap_constants({1, 1}, 2);
    EXPECT_EQ(a.c1, 16u);
    EXPECT_NEAR(a.c2, std::pow(3.0, -0.8), 1e-15);
    EXPECT_NEAR(a.c3, 24.0, 1e-12);
    EXPECT_EQ(thmap_constants({2, 2}, 2).c1, 4096u);
    EXPECT_LT(thmap_constants({1, 2}, 2).c1, thmap_constants({1, 3}, 2).c1);
    for (unsigned n = 2; n <= 6; ++n)
        for (u64 m = 1; m <= 6; ++m) {
            const auto k = thmap_constants(std::vector<u64>(n, m), n);
            EXPECT_FALSE(k.c1_saturated);
            EXPECT_GT(k.c2, 0);
            EXPECT_GT(k.c3, 0);
            u128 expect = 1;
            for (unsigned i = 0; i < 2 * n; ++i) expect *= 2;
            for (unsigned i = 0; i < 4 * n; ++i) expect *= m;
            EXPECT_EQ(k.c1, expect);
        }
    EXPECT_THROW((void)thmap_constants({1}, 1), Error);
    EXPECT_THROW((void)thmap_constants({1, 1, 1}, 2), Error);
}

TEST(VerifyTheorem2, PremiseClauses) {
    const Subgroup G(make_prime(13), 3);
    const auto v = verify_theorem2(poly("x+y", 13), G);
    EXPECT_FALSE(v.premise_met);
    EXPECT_EQ(v.failing_clause, "not_admitted");
    EXPECT_EQ(v.outcome, Outcome::premise_not_met);
    EXPECT_FALSE(v.lhs.has_value());
    const auto w = verify_theorem2(poly("(x+y)^2", 13), G);
    EXPECT_EQ(w.failing_clause, "not_good:reducible_shift");
}

TEST(VerifyTheorem2, AdmittedInstanceHolds) {
    const Prime p = admitted_prime_for_order(101);
    const Subgroup G(p, 101);
    const auto P = poly("x+2*y", p);
    std::set<u64> sums;
    for (u64 a : G.elements())
        for (u64 b : G.elements()) sums.insert((a + 2 * b) % p);
    const auto v = verify_theorem2(P, G);
    ASSERT_TRUE(v.premise_met);
    EXPECT_EQ(*v.lhs, sums.size());
    EXPECT_TRUE(v.holds());
    EXPECT_NEAR(*v.ratio, static_cast<double>(sums.size()) / std::pow(101.0, 1.5), 1e-12);
    EXPECT_NEAR(*v.rhs, std::pow(101.0, 1.5) / 64000.0, 1e-12);
}

TEST(VerifyVm, PremiseClauses) {
    const Subgroup G(make_prime(13), 3);
    EXPECT_EQ(verify_vm(poly("x+y", 13), G, ValueSet(G.prime(), {2})).failing_clause, "not_admitted");
    // |G| = 101 admits n = 1, but h = 1 is not below |G|^2 / 64000.
    const Prime p = admitted_prime_for_order(101);
    const Subgroup H(p, 101);
    EXPECT_EQ(verify_vm(poly("x+y", p), H, ValueSet(p, {1})).failing_clause, "h_bound");
    EXPECT_EQ(verify_vm(poly("x+y", p), H, ValueSet(p, {})).failing_clause, "no_levels");
    EXPECT_THROW((void)verify_vm(poly("x+y", 13), G, ValueSet(G.prime(), {2, 5})), Error);
}

TEST(VerifyVm, AdmittedInstanceHolds) {
    // Two levels need |G|^2 > 2 * 64000.
    const Prime p = admitted_prime_for_order(400);
    const Subgroup G(p, 400);
    const auto P = poly("x+y", p);
    const std::vector<u64> levels{2, 3};
    ASSERT_NE(G.coset_key(2), G.coset_key(3));
    u64 brute = 0;
    for (u64 a : G.elements())
        for (u64 b : G.elements()) brute += (a + b) % p == 2 || (a + b) % p == 3;
    const auto v = verify_vm(P, G, ValueSet(p, levels));
    ASSERT_TRUE(v.premise_met) << v.failing_clause;
    EXPECT_EQ(*v.lhs, brute);
    EXPECT_TRUE(v.holds());
    EXPECT_NEAR(*v.rhs, 24.0 * std::cbrt(4.0) * std::cbrt(400.0 * 400.0), 1e-9);
}

TEST(VerifyGv, Examples) {
    const auto v = verify_gv(Subgroup(make_prime(13), 3), 1);
    EXPECT_TRUE(v.premise_met);
    EXPECT_EQ(*v.lhs, 0u);
    EXPECT_TRUE(v.holds());
    const auto w = verify_gv(Subgroup(make_prime(13), 12), 1);
    EXPECT_FALSE(w.premise_met);
    EXPECT_EQ(w.failing_clause, "order_too_large");
}

TEST(VerifyGv, PremiseMatchesFloatingFormula) {
    for (u64 p = 5; p < 2000; ++p) {
        if (!trial_division_prime(p)) continue;
        for (const auto& G : enumerate_subgroups(make_prime(p))) {
            const double N = static_cast<double>(p - 1);
            const double bound = N / (std::pow(N, 0.25) + 1);
            const double g = static_cast<double>(G.order());
            if (std::fabs(g - bound) < 1e-9) continue;
            EXPECT_EQ(gv_premise(G), g < bound) << p << " " << G.order();
        }
    }
}

TEST(VerifyThmap, PremiseClauses) {
    const Subgroup G(make_prime(13), 3);
    const auto C = coset_of(1, G);
    const auto v = verify_thmap({uni({1, 1}, 13), uni({12, 1}, 13)}, {C, C}, G);
    EXPECT_FALSE(v.premise_met);
    EXPECT_EQ(v.failing_clause, "order_below_c1");
    const auto w = verify_thmap({uni({1, 1}, 13), uni({1, 1}, 13)}, {C, C}, G);
    EXPECT_EQ(w.failing_clause, "not_permissible:0(no_private_root)1(no_private_root)");
    const auto z = verify_thmap({uni({0, 1}, 13), uni({1, 1}, 13)}, {C, C}, G);
    EXPECT_EQ(z.failing_clause, "not_permissible:0(free_term)");
}

TEST(VerifyThmap, LinearPairsHold) {
    std::mt19937_64 rng(59);
    int checked = 0;
    for (u64 p = 439; p <= 1500; ++p) {
        if (!trial_division_prime(p)) continue;
        for (u64 d : nt::divisors(p - 1)) {
            if (!(d > 16 && static_cast<double>(d) < std::pow(3.0, -0.8) * std::pow(static_cast<double>(p), 0.6))) continue;
            const Subgroup G(make_prime(p), d);
            const u64 a = rng() % (p - 1) + 1;
            u64 b = rng() % (p - 1) + 1;
            if (b == a) b = a % (p - 1) + 1;
            const auto c1 = coset_of(rng() % (p - 1) + 1, G), c2 = coset_of(rng() % (p - 1) + 1, G);
            u64 brute = 0;
            for (u64 x = 0; x < p; ++x)
                brute += std::binary_search(c1.members.begin(), c1.members.end(), (x + a) % p) &&
                         std::binary_search(c2.members.begin(), c2.members.end(), (x + b) % p);
            const auto v = verify_thmap({uni({a, 1}, p), uni({b, 1}, p)}, {c1, c2}, G);
            ASSERT_TRUE(v.premise_met) << p << " " << d << " " << v.failing_clause;
            EXPECT_EQ(*v.lhs, brute);
            EXPECT_TRUE(v.holds());
            EXPECT_LE(static_cast<double>(*v.lhs), 24.0 * std::pow(static_cast<double>(d), 0.75));
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(ProbeGrowth, Examples) {
    const auto g = probe_growth(Subgroup(make_prime(13), 3));
    EXPECT_EQ(g.sum_size, 6u);
    EXPECT_NEAR(g.sum_ratio_4_3, 6.0 / std::pow(3.0, 4.0 / 3.0), 1e-12);
    EXPECT_NEAR(g.sum_ratio_4_3, 1.387, 1e-3);
    const auto t = probe_growth(Subgroup(make_prime(13), 1));
    EXPECT_EQ(t.sum_size, 1u);
    EXPECT_DOUBLE_EQ(t.sum_ratio_4_3, 1.0);
    EXPECT_DOUBLE_EQ(t.diff_ratio_3_2, 1.0);
    for (const auto& G : enumerate_subgroups(make_prime(181))) {
        const auto r = probe_growth(G);
        EXPECT_GT(r.sum_ratio_4_3, 0);
        EXPECT_GT(r.diff_ratio_4_3, 0);
        if (G.order() > 1) {
            EXPECT_GT(*r.sum_ratio_5_3_log, 0);
        }
    }
}

TEST(ExtractPermissible, Examples) {
    const auto a = extract_permissible(poly("x+y", 13), {1, 2, 3, 4, 5});
    EXPECT_EQ(a.kept.size(), 5u);
    EXPECT_EQ(a.guarantee, 3);
    EXPECT_TRUE(a.permissible);
    EXPECT_TRUE(a.meets_guarantee);
    const auto b = extract_permissible(poly("x^2+y^2", 13), {1, 12});
    EXPECT_EQ(b.kept.size(), 1u);
    EXPECT_EQ(b.guarantee, 0);
    EXPECT_TRUE(b.meets_guarantee);
    const auto c = extract_permissible(poly("x+y", 13), {0, 1, 2});
    EXPECT_EQ(c.dropped_degenerate, (std::vector<std::size_t>{0}));
    EXPECT_EQ(c.kept.size(), 2u);
    try {
        (void)extract_permissible(poly("x*y+x", 13), {1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_required);
    }
    try {
        (void)extract_permissible(poly("x+y", 13), {1, 14});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::duplicate_y);
    }
}

TEST(ExtractPermissible, RandomizedGuarantee) {
    std::mt19937_64 rng(61);
    int trials = 0;
    while (trials < 60) {
        u64 p = 0;
        while (p < 5 || !trial_division_prime(p)) p = rng() % 101 + 1;
        const auto F = PrimeField(make_prime(p));
        FpPoly P(F);
        for (int k = 0; k < 6; ++k) P = P + FpPoly::monomial(F, rng() % p, static_cast<int>(rng() % 4), static_cast<int>(rng() % 4));
        if (P.is_zero() || P.deg_x() < 1 || P.deg_y() < 1 || !is_required(P)) continue;
        const u64 h = std::min<u64>(rng() % 40 + 1, p);
        std::vector<u64> all(p);
        for (u64 i = 0; i < p; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(h);
        const auto e = extract_permissible(P, all);
        EXPECT_TRUE(e.meets_guarantee) << P.to_string();
        if (!e.kept.empty()) {
            std::vector<FpUniPoly> fs;
            for (auto i : e.kept) fs.push_back(P.at_y(all[i]));
            EXPECT_TRUE(is_permissible(fs)) << P.to_string();
        }
        ++trials;
    }
}

TEST(HMin, Formula) {
    EXPECT_EQ(h_min_formula(3, 1, 1), 5u);
    EXPECT_EQ(h_min_formula(1, 1, 1), 3u);
    for (u64 n = 1; n < 5; ++n)
        for (u64 k = 1; k < 5; ++k)
            for (u64 l = 1; l < 5; ++l) {
                EXPECT_LT(h_min_formula(n, k, l), h_min_formula(n + 1, k, l));
                EXPECT_LT(h_min_formula(n, k, l), h_min_formula(n, k + 1, l));
                EXPECT_LT(h_min_formula(n, k, l), h_min_formula(n, k, l + 1));
            }
    EXPECT_EQ(min_q_for_delta(0.5), 2u);
    EXPECT_EQ(min_q_for_delta(0.1), 5u);
}

TEST(ProbeFactorization, Examples) {
    const Prime p = make_prime(13);
    const Subgroup G(p, 12);
    EXPECT_THROW((void)probe_factorization(poly("x+y", 13), ValueSet::of(G), ValueSet(p, {0}), G, {}), Error);
    const auto notrep = probe_factorization(poly("x*y+x+y", 13), ValueSet(p, {1, 2}), ValueSet(p, {1, 2}), G, {});
    EXPECT_FALSE(notrep.is_representation);
    const auto rep = probe_factorization(poly("x+y", 13), ValueSet(p, {1, 2, 3, 4}), ValueSet(p, {0, 4, 8}), G, {});
    EXPECT_TRUE(rep.is_representation);
    EXPECT_TRUE(rep.product_bound);
    EXPECT_EQ(rep.image_size, 12u);
    EXPECT_NEAR(*rep.exponent_a, std::log(4.0) / std::log(12.0), 1e-12);
    EXPECT_THROW((void)probe_factorization(poly("x+y", 13), ValueSet::of(G), ValueSet::of(G), G, {0.0, 0.25}), Error);
}
