#ifndef SUMPROD_BOUNDS_HPP
#define SUMPROD_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bipoly.hpp"
#include "error.hpp"
#include "predicates.hpp"
#include "setops.hpp"
#include "subgroup.hpp"

namespace sumprod {

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

/// Positive rational num / den.
struct Rational {
    u128 num = 0;
    u128 den = 1;
    double to_double() const noexcept { return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den)); }
    std::string to_string() const { return sumprod::to_string(num) + "/" + sumprod::to_string(den); }
};

/// Constants of the G x G lower bound for degree n: c1 = 24 n^4,
/// c2 = 1 / (64000 n^9), c = min(((100n^2 - 1) / (100 n^2 c1))^(3/2), c2).
/// c1 and c2 are exact; the 3/2-power branch and c are doubles (relative error
/// below 1e-15).
struct Theorem2Constants {
    u64 n = 1;
    u128 c1 = 0;
    Rational c2;
    double power_branch = 0;
    double c = 0;
};

inline Theorem2Constants theorem2_constants(u64 n) {
    if (n < 1 || n > 64) fail(ErrorCode::invalid_argument, "degree n must lie in [1, 64]");
    Theorem2Constants out;
    out.n = n;
    const u128 n2 = static_cast<u128>(n) * n;
    out.c1 = 24 * n2 * n2;
    u128 n9 = 1;
    for (int k = 0; k < 9; ++k) n9 *= n;
    out.c2 = {1, 64000 * n9};
    const long double base = static_cast<long double>(100 * n2 - 1) / (static_cast<long double>(100 * n2) * static_cast<long double>(out.c1));
    out.power_branch = static_cast<double>(std::pow(base, 1.5L));
    out.c = std::min(out.power_branch, out.c2.to_double());
    return out;
}

/// Constants of the fiber-set bound for n polynomials of degrees m:
/// c1 = 2^(2n) (max m)^(4n), c2 = (n+1)^(-2n/(2n+1)) (prod m)^(-2/(2n+1)),
/// c3 = 4 (n+1) (prod m)^(1/n) sum m. c1 saturates at 2^128 - 1.
struct ThMapConstants {
    unsigned n = 0;
    std::vector<u64> m;
    u128 c1 = 0;
    bool c1_saturated = false;
    double c2 = 0;
    double c3 = 0;
};

inline ThMapConstants thmap_constants(const std::vector<u64>& m, unsigned n) {
    if (n < 2) fail(ErrorCode::invalid_argument, "thmap constants need n >= 2");
    if (m.size() != n) fail(ErrorCode::length_mismatch, "degree vector length differs from n");
    for (u64 mi : m)
        if (mi < 1) fail(ErrorCode::invalid_argument, "degrees must be >= 1");
    ThMapConstants out;
    out.n = n;
    out.m = m;
    const u64 max_m = *std::max_element(m.begin(), m.end());
    u128 c1 = 1;
    auto mul_sat = [&](u64 f) {
        if (out.c1_saturated) return;
        if (c1 > std::numeric_limits<u128>::max() / f) {
            out.c1_saturated = true;
            c1 = std::numeric_limits<u128>::max();
        } else {
            c1 *= f;
        }
    };
    for (unsigned k = 0; k < 2 * n; ++k) mul_sat(2);
    for (unsigned k = 0; k < 4 * n; ++k) mul_sat(max_m);
    out.c1 = c1;
    long double log_prod = 0, sum = 0;
    for (u64 mi : m) {
        log_prod += std::log(static_cast<long double>(mi));
        sum += static_cast<long double>(mi);
    }
    const long double nn = n;
    out.c2 = static_cast<double>(std::exp(-(2 * nn / (2 * nn + 1)) * std::log(nn + 1) - (2 / (2 * nn + 1)) * log_prod));
    out.c3 = static_cast<double>(4 * (nn + 1) * std::exp(log_prod / nn) * sum);
    return out;
}

enum class Inequality { theorem2, vm, gv, thmap };

constexpr std::string_view to_string(Inequality id) noexcept {
    switch (id) {
        case Inequality::theorem2: return "t2";
        case Inequality::vm: return "vm";
        case Inequality::gv: return "gv";
        case Inequality::thmap: return "thmap";
    }
    return "unknown";
}

enum class Outcome { premise_not_met, holds, fails, borderline };

constexpr std::string_view to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::premise_not_met: return "premise_not_met";
        case Outcome::holds: return "holds";
        case Outcome::fails: return "fails";
        case Outcome::borderline: return "borderline";
    }
    return "unknown";
}

/// Relative tolerance of real-valued right-hand sides.
inline constexpr double rhs_tolerance = 1e-12;

/// One checked instance of a conditional inequality. lhs, rhs and ratio are
/// only evaluated when the premise holds.
struct Verdict {
    Inequality id = Inequality::gv;
    bool premise_met = false;
    std::string failing_clause;
    std::optional<u64> lhs;
    std::optional<double> rhs;
    std::optional<double> ratio;  // lhs over the pure |G|-power of the bound
    Outcome outcome = Outcome::premise_not_met;

    bool holds() const noexcept { return outcome == Outcome::holds; }
};

namespace detail {

enum class Direction { upper, strict_lower };

inline Outcome classify(u64 lhs, double rhs, Direction dir) {
    const double l = static_cast<double>(lhs);
    if (std::fabs(l - rhs) <= rhs_tolerance * std::fabs(rhs)) return Outcome::borderline;
    const bool ok = dir == Direction::upper ? l <= rhs : l > rhs;
    return ok ? Outcome::holds : Outcome::fails;
}

inline Verdict not_met(Inequality id, std::string clause) {
    Verdict v;
    v.id = id;
    v.failing_clause = std::move(clause);
    return v;
}

inline Verdict evaluated(Inequality id, u64 lhs, double rhs, double power, Direction dir) {
    Verdict v;
    v.id = id;
    v.premise_met = true;
    v.lhs = lhs;
    v.rhs = rhs;
    v.ratio = static_cast<double>(lhs) / power;
    v.outcome = classify(lhs, rhs, dir);
    return v;
}

inline void validate_levels(const Subgroup& G, const ValueSet& alphas) {
    std::map<u64, u64> seen;
    for (u64 a : alphas.members()) {
        if (a == 0) fail(ErrorCode::zero_level, "level 0 is not allowed");
        auto [it, inserted] = seen.emplace(G.coset_key(a), a);
        if (!inserted)
            fail(ErrorCode::coset_collision, "levels " + std::to_string(it->second) + " and " + std::to_string(a) + " share a G-coset");
    }
}

}  // namespace detail

/// |P(G,G)| > c |G|^(3/2) for good P of degree n and (n,p)-admitted G.
inline Verdict verify_theorem2(const FpPoly& P, const Subgroup& G, u64 max_pairs = default_pair_budget) {
    const auto good = is_good(P);
    if (!good) return detail::not_met(Inequality::theorem2, "not_good:" + std::string(to_string(good.reason)));
    const u64 n = static_cast<u64>(P.total_degree());
    if (!is_admitted(G, n)) return detail::not_met(Inequality::theorem2, "not_admitted");
    const u64 lhs = image(P, ValueSet::of(G), ValueSet::of(G), max_pairs).size();
    const double power = std::pow(static_cast<double>(G.order()), 1.5);
    return detail::evaluated(Inequality::theorem2, lhs, theorem2_constants(n).c * power, power, detail::Direction::strict_lower);
}

/// At most c1 h^(2/3) |G|^(2/3) pairs of G x G land on h levels from distinct
/// cosets, for good P, admitted G and h < c2 |G|^2.
inline Verdict verify_vm(const FpPoly& P, const Subgroup& G, const ValueSet& alphas, u64 max_pairs = default_pair_budget) {
    detail::check_same_prime(alphas.prime(), G.prime());
    detail::validate_levels(G, alphas);
    const auto good = is_good(P);
    if (!good) return detail::not_met(Inequality::vm, "not_good:" + std::string(to_string(good.reason)));
    const u64 n = static_cast<u64>(P.total_degree());
    if (!is_admitted(G, n)) return detail::not_met(Inequality::vm, "not_admitted");
    const u64 h = alphas.size();
    if (h == 0) return detail::not_met(Inequality::vm, "no_levels");
    const auto consts = theorem2_constants(n);
    const u128 g = G.order();
    if (!(static_cast<u128>(h) * consts.c2.den < g * g * consts.c2.num)) return detail::not_met(Inequality::vm, "h_bound");
    const u64 lhs = count_level_pairs(P, G, alphas, max_pairs).total;
    const double power = std::cbrt(static_cast<double>(h) * static_cast<double>(h)) *
                         std::cbrt(static_cast<double>(G.order()) * static_cast<double>(G.order()));
    return detail::evaluated(Inequality::vm, lhs, static_cast<double>(consts.c1) * power, power, detail::Direction::upper);
}

/// Exact test of |G| < (p-1) / ((p-1)^(1/4) + 1), i.e. |G|^4 (p-1) < (p-1-|G|)^4.
inline bool gv_premise(const Subgroup& G) {
    using boost::multiprecision::cpp_int;
    const u64 N = G.prime() - 1;
    const u64 s = G.order();
    if (s >= N) return false;
    const cpp_int S = s, t = N - s;
    return S * S * S * S * cpp_int(N) < t * t * t * t;
}

/// |G ∩ (G + mu)| <= 4 |G|^(2/3) when |G| < (p-1)/((p-1)^(1/4)+1).
inline Verdict verify_gv(const Subgroup& G, u64 mu) {
    if (mu % G.prime() == 0) fail(ErrorCode::zero_shift, "shift mu must be nonzero");
    if (!gv_premise(G)) return detail::not_met(Inequality::gv, "order_too_large");
    const u64 lhs = shift_intersection(G, mu);
    const double power = std::cbrt(static_cast<double>(G.order()) * static_cast<double>(G.order()));
    return detail::evaluated(Inequality::gv, lhs, 4.0 * power, power, detail::Direction::upper);
}

/// |M| <= c3 |G|^(1/2 + 1/(2n)) for permissible f_1..f_n and c1 < |G| < c2 p^(1 - 1/(2n+1)).
inline Verdict verify_thmap(const std::vector<FpUniPoly>& fs, const std::vector<Coset>& cosets, const Subgroup& G,
                            u64 max_evaluations = default_pair_budget) {
    if (fs.size() != cosets.size())
        fail(ErrorCode::length_mismatch, std::to_string(fs.size()) + " polynomials vs " + std::to_string(cosets.size()) + " cosets");
    if (fs.size() < 2) fail(ErrorCode::invalid_argument, "thmap needs n >= 2 polynomials");
    for (const auto& c : cosets)
        if (!is_coset_of(c, G)) fail(ErrorCode::invalid_argument, "coset with representative " + std::to_string(c.representative) + " is not a G-coset");
    const auto perm = is_permissible(fs);
    if (!perm) {
        std::string clause = "not_permissible:";
        for (std::size_t i = 0; i < perm.per_index.size(); ++i) {
            const auto& d = perm.per_index[i];
            if (d.nonzero_free_term && d.private_root) continue;
            clause += std::to_string(i);
            clause += !d.nonzero_free_term ? "(free_term)" : "(no_private_root)";
        }
        return detail::not_met(Inequality::thmap, clause);
    }
    const unsigned n = static_cast<unsigned>(fs.size());
    std::vector<u64> m;
    for (const auto& f : fs) m.push_back(static_cast<u64>(f.degree()));
    const auto consts = thmap_constants(m, n);
    if (!(consts.c1 < static_cast<u128>(G.order()))) return detail::not_met(Inequality::thmap, "order_below_c1");
    const long double upper = static_cast<long double>(consts.c2) *
                              std::pow(static_cast<long double>(G.prime().value()), 1.0L - 1.0L / (2.0L * n + 1.0L));
    if (!(static_cast<long double>(G.order()) < upper)) return detail::not_met(Inequality::thmap, "order_above_c2_bound");
    const u64 lhs = fiber_set(fs, cosets, max_evaluations).size();
    const double power = std::pow(static_cast<double>(G.order()), 0.5 + 1.0 / (2.0 * n));
    return detail::evaluated(Inequality::thmap, lhs, consts.c3 * power, power, detail::Direction::upper);
}

/// Sumset sizes against the |G|-powers 4/3, 3/2 and 5/3 (with log^(1/2)).
/// Ratios only; the growth statements carry no explicit constant.
struct GrowthProbe {
    u64 order = 0;
    u64 sum_size = 0;
    u64 diff_size = 0;
    double sum_ratio_4_3 = 0, diff_ratio_4_3 = 0;
    double sum_ratio_3_2 = 0, diff_ratio_3_2 = 0;
    std::optional<double> sum_ratio_5_3_log, diff_ratio_5_3_log;  // undefined for |G| = 1
};

inline GrowthProbe probe_growth(const Subgroup& G, u64 max_pairs = default_pair_budget) {
    const auto S = ValueSet::of(G);
    GrowthProbe out;
    out.order = G.order();
    out.sum_size = sumset(S, S, Sign::plus, max_pairs).size();
    out.diff_size = sumset(S, S, Sign::minus, max_pairs).size();
    const double g = static_cast<double>(G.order());
    const double p43 = std::pow(g, 4.0 / 3.0), p32 = std::pow(g, 1.5), p53 = std::pow(g, 5.0 / 3.0);
    out.sum_ratio_4_3 = static_cast<double>(out.sum_size) / p43;
    out.diff_ratio_4_3 = static_cast<double>(out.diff_size) / p43;
    out.sum_ratio_3_2 = static_cast<double>(out.sum_size) / p32;
    out.diff_ratio_3_2 = static_cast<double>(out.diff_size) / p32;
    if (G.order() >= 2) {
        const double lg = std::sqrt(std::log(g));
        out.sum_ratio_5_3_log = static_cast<double>(out.sum_size) * lg / p53;
        out.diff_ratio_5_3_log = static_cast<double>(out.diff_size) * lg / p53;
    }
    return out;
}

/// Result of the greedy permissible-subset extraction. Indices refer to the
/// input sequence of y values.
struct Extraction {
    std::vector<std::size_t> kept;                       // pick order (ascending y)
    std::vector<std::size_t> dropped_degenerate;          // roots of p_k(y) or p_0(y)
    std::vector<std::vector<std::size_t>> dropped_by_pick;  // parallel to kept
    long long guarantee = 0;                              // max(0, floor((h - 2l) / (kl)))
    bool permissible = false;
    bool meets_guarantee = false;
};

inline long long extraction_guarantee(long long h, long long k, long long l) {
    const long long num = h - 2 * l;
    return num <= 0 ? 0 : num / (k * l);
}

/// Among f_i(x) = P(x, y_i), drop y that are roots of the leading or free
/// x-coefficient, then repeatedly keep the smallest remaining y and drop every
/// other y whose polynomial shares a root with the kept one.
inline Extraction extract_permissible(const FpPoly& P, const std::vector<u64>& ys) {
    if (P.is_zero() || !is_required(P)) fail(ErrorCode::not_required, P.to_string() + " is not required");
    const int k = P.deg_x(), l = P.deg_y();
    if (k < 1 || l < 1) fail(ErrorCode::invalid_argument, "extraction needs deg_x >= 1 and deg_y >= 1");
    const u64 p = P.field().prime();
    std::vector<std::size_t> order(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ys[a] % p < ys[b] % p; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (ys[order[i]] % p == ys[order[i - 1]] % p) fail(ErrorCode::duplicate_y, "y value " + std::to_string(ys[order[i]] % p) + " repeats");

    const auto rows = P.coeffs_in_x();
    const auto& lead = rows[static_cast<std::size_t>(k)];
    const auto& free_term = rows[0];

    Extraction out;
    out.guarantee = extraction_guarantee(static_cast<long long>(ys.size()), k, l);
    std::vector<std::size_t> remaining;
    for (std::size_t idx : order) {
        const u64 y = ys[idx] % p;
        if (lead.eval(y) == 0 || free_term.eval(y) == 0)
            out.dropped_degenerate.push_back(idx);
        else
            remaining.push_back(idx);
    }
    std::vector<FpUniPoly> fibers;
    fibers.reserve(ys.size());
    for (u64 y : ys) fibers.push_back(P.at_y(y % p));

    std::vector<bool> gone(ys.size(), false);
    std::vector<FpUniPoly> chosen;
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
        const std::size_t i = remaining[pos];
        if (gone[i]) continue;
        gone[i] = true;
        out.kept.push_back(i);
        chosen.push_back(fibers[i]);
        std::vector<std::size_t> dropped;
        for (std::size_t later = pos + 1; later < remaining.size(); ++later) {
            const std::size_t j = remaining[later];
            if (gone[j]) continue;
            if (uni_gcd(fibers[i], fibers[j]).degree() >= 1) {
                gone[j] = true;
                dropped.push_back(j);
            }
        }
        out.dropped_by_pick.push_back(std::move(dropped));
    }
    out.permissible = chosen.empty() ? false : is_permissible(chosen).permissible;
    out.meets_guarantee = static_cast<long long>(out.kept.size()) >= out.guarantee;
    return out;
}

/// n k l + 2 l values of y always contain n permissible fibers.
inline u64 h_min_formula(u64 n, u64 k, u64 l) {
    if (n < 1 || k < 1 || l < 1) fail(ErrorCode::invalid_argument, "n, k, l must be >= 1");
    return n * k * l + 2 * l;
}

/// Smallest q >= 2 with 1 - 1/(2q+1) > 1 - delta.
inline u64 min_q_for_delta(double delta) {
    if (!(delta > 0 && delta < 1)) fail(ErrorCode::invalid_argument, "delta must lie in (0, 1)");
    u64 q = 2;
    while (!(1.0 / (2.0 * static_cast<double>(q) + 1.0) < delta)) ++q;
    return q;
}

struct ProbeConfig {
    double delta = 0.5;
    double epsilon = 0.25;
};

struct FactorizationProbe {
    u64 order = 0;
    u64 size_a = 0;
    u64 size_b = 0;
    u64 image_size = 0;
    bool is_representation = false;  // P(A, B) == G
    bool product_bound = false;      // |A||B| >= |G|, checked when a representation
    std::optional<double> exponent_a, exponent_b;  // log|A| / log|G|
    bool in_window = false;                        // both exponents in (1/2 - eps, 1/2 + eps)
    std::optional<double> order_exponent;          // log|G| / log p
    bool below_p_power = false;                    // |G| < p^(1 - delta)
    u64 q_for_delta = 0;
};

inline FactorizationProbe probe_factorization(const FpPoly& P, const ValueSet& A, const ValueSet& B, const Subgroup& G,
                                              const ProbeConfig& cfg, u64 max_pairs = default_pair_budget) {
    if (!(cfg.delta > 0 && cfg.delta < 1) || !(cfg.epsilon > 0 && cfg.epsilon < 1))
        fail(ErrorCode::invalid_argument, "delta and epsilon must lie in (0, 1)");
    if (P.is_zero() || !is_required(P)) fail(ErrorCode::not_required, P.to_string() + " is not required");
    if (A.size() < 2 || B.size() < 2) fail(ErrorCode::invalid_argument, "|A| and |B| must be at least 2");
    detail::check_same_prime(A.prime(), G.prime());
    const auto img = image(P, A, B, max_pairs);
    FactorizationProbe out;
    out.order = G.order();
    out.size_a = A.size();
    out.size_b = B.size();
    out.image_size = img.size();
    out.is_representation = img.members() == G.elements();
    out.product_bound = static_cast<u128>(A.size()) * B.size() >= G.order();
    if (out.is_representation && !out.product_bound)
        throw std::logic_error("surjection A x B -> G with |A||B| < |G|");
    const double p = static_cast<double>(G.prime().value());
    const double g = static_cast<double>(G.order());
    if (G.order() >= 2) {
        out.exponent_a = std::log(static_cast<double>(A.size())) / std::log(g);
        out.exponent_b = std::log(static_cast<double>(B.size())) / std::log(g);
        const double lo = 0.5 - cfg.epsilon, hi = 0.5 + cfg.epsilon;
        out.in_window = *out.exponent_a > lo && *out.exponent_a < hi && *out.exponent_b > lo && *out.exponent_b < hi;
    }
    out.order_exponent = std::log(g) / std::log(p);
    out.below_p_power = g < std::pow(p, 1.0 - cfg.delta);
    out.q_for_delta = min_q_for_delta(cfg.delta);
    return out;
}

}  // namespace sumprod

#endif  // SUMPROD_BOUNDS_HPP
