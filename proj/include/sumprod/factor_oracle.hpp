#ifndef SUMPROD_FACTOR_ORACLE_HPP
#define SUMPROD_FACTOR_ORACLE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bipoly.hpp"
#include "error.hpp"
#include "ext_field.hpp"

namespace sumprod {

/// Brute-force factor search for bivariate polynomials over F_p of total
/// degree <= 4: every candidate divisor of total degree 1..deg/2 with
/// coefficients in F_{p^d}, d = 1..d_max, normalized to a monic leading term
/// under graded-lex order, is tried by exact division. Independent of the
/// multiplicity criterion in predicates.hpp.
class FactorOracle {
public:
    static constexpr int max_degree = 4;
    static constexpr u64 default_candidate_budget = u64{1} << 24;

    struct Witness {
        unsigned extension_degree;
        BiPoly<ExtField> factor;
    };

    FactorOracle(Prime p, unsigned d_max, u64 element_budget = ExtField::default_element_budget,
                 u64 candidate_budget = default_candidate_budget)
        : p_(p), candidate_budget_(candidate_budget) {
        if (d_max < 1) fail(ErrorCode::invalid_argument, "d_max must be >= 1");
        for (unsigned d = 1; d <= d_max; ++d) fields_.emplace_back(p, d, element_budget);
    }

    Prime prime() const noexcept { return p_; }
    unsigned max_extension() const noexcept { return static_cast<unsigned>(fields_.size()); }

    bool has_factor(const FpPoly& Q) const { return find_factor(Q).has_value(); }

    std::optional<Witness> find_factor(const FpPoly& Q) const {
        if (Q.field().prime() != p_) fail(ErrorCode::invalid_argument, "polynomial over a different prime");
        if (Q.total_degree() > max_degree)
            fail(ErrorCode::invalid_argument, "oracle supports total degree <= 4, got " + std::to_string(Q.total_degree()));
        const int n = Q.total_degree();
        if (n < 2) return std::nullopt;
        Dense target{};
        for (const auto& [m, c] : Q.terms()) target[slot(m.first, m.second)] = c;
        for (const auto& field : fields_) {
            for (int e = 1; 2 * e <= n; ++e) {
                if (auto f = search(field, target, e)) return Witness{field.degree(), to_bipoly(field, *f)};
            }
        }
        return std::nullopt;
    }

private:
    static constexpr int side = max_degree + 1;
    using Dense = std::array<u64, side * side>;

    static constexpr int slot(int i, int j) noexcept { return i * side + j; }

    // Monomials with i + j <= max_degree in descending graded-lex order.
    static const std::vector<std::pair<int, int>>& grlex_desc() {
        static const std::vector<std::pair<int, int>> order = [] {
            std::vector<std::pair<int, int>> v;
            for (int t = max_degree; t >= 0; --t)
                for (int i = t; i >= 0; --i) v.emplace_back(i, t - i);
            return v;
        }();
        return order;
    }

    static bool divides(const ExtField& F, const Dense& divisor, std::pair<int, int> lead, const Dense& target) {
        Dense r = target;
        for (auto [i, j] : grlex_desc()) {
            const u64 t = r[slot(i, j)];
            if (t == 0) continue;
            if (i < lead.first || j < lead.second) return false;
            const int di = i - lead.first, dj = j - lead.second;
            for (int a = 0; a + di < side; ++a)
                for (int b = 0; a + b <= max_degree && b + dj < side; ++b) {
                    const u64 c = divisor[slot(a, b)];
                    if (c == 0) continue;
                    auto& s = r[slot(a + di, b + dj)];
                    s = F.sub(s, F.mul(t, c));
                }
        }
        return true;
    }

    static u64 eval(const ExtField& F, const Dense& poly, u64 x, u64 y) {
        u64 acc = 0;
        for (auto [i, j] : grlex_desc()) {
            const u64 c = poly[slot(i, j)];
            if (c == 0) continue;
            acc = F.add(acc, F.mul(c, F.mul(F.pow(x, static_cast<u64>(i)), F.pow(y, static_cast<u64>(j)))));
        }
        return acc;
    }

    std::optional<Dense> search(const ExtField& F, const Dense& target, int e) const {
        const u64 q = F.order();
        if (e == 1) {
            // x + b*y + c: the line passes through (-c, 0), which must be a zero of Q.
            for (u64 c = 0; c < q; ++c) {
                if (eval(F, target, F.neg(c), 0) != 0) continue;
                for (u64 b = 0; b < q; ++b) {
                    Dense cand{};
                    cand[slot(1, 0)] = 1;
                    cand[slot(0, 1)] = b;
                    cand[slot(0, 0)] = c;
                    if (divides(F, cand, {1, 0}, target)) return cand;
                }
            }
            // y + c: Q must vanish at (0, -c).
            for (u64 c = 0; c < q; ++c) {
                if (eval(F, target, 0, F.neg(c)) != 0) continue;
                Dense cand{};
                cand[slot(0, 1)] = 1;
                cand[slot(0, 0)] = c;
                if (divides(F, cand, {0, 1}, target)) return cand;
            }
            return std::nullopt;
        }

        // Generic enumeration for e >= 2; leading monomial x^(e-t) y^t.
        u64 total = 0;
        std::vector<std::vector<std::pair<int, int>>> free_sets;
        for (int t = 0; t <= e; ++t) {
            std::vector<std::pair<int, int>> free;
            for (int s = t + 1; s <= e; ++s) free.emplace_back(e - s, s);
            for (int deg = e - 1; deg >= 0; --deg)
                for (int i = deg; i >= 0; --i) free.emplace_back(i, deg - i);
            u64 count = 1;
            for (std::size_t k = 0; k < free.size(); ++k) {
                if (count > candidate_budget_ / q) fail(ErrorCode::budget_exceeded, "factor candidate count exceeds budget");
                count *= q;
            }
            total += count;
            if (total > candidate_budget_) fail(ErrorCode::budget_exceeded, "factor candidate count exceeds budget");
            free_sets.push_back(std::move(free));
        }
        for (int t = 0; t <= e; ++t) {
            const auto& free = free_sets[static_cast<std::size_t>(t)];
            const std::pair<int, int> lead{e - t, t};
            std::vector<u64> digits(free.size(), 0);
            for (;;) {
                Dense cand{};
                cand[slot(lead.first, lead.second)] = 1;
                for (std::size_t k = 0; k < free.size(); ++k) cand[slot(free[k].first, free[k].second)] = digits[k];
                if (divides(F, cand, lead, target)) return cand;
                std::size_t k = 0;
                while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
                if (k == digits.size()) break;
            }
        }
        return std::nullopt;
    }

    static BiPoly<ExtField> to_bipoly(const ExtField& F, const Dense& d) {
        BiPoly<ExtField> out(F);
        for (int i = 0; i < side; ++i)
            for (int j = 0; i + j <= max_degree; ++j) out.add_term(i, j, d[slot(i, j)]);
        return out;
    }

    Prime p_;
    u64 candidate_budget_;
    std::vector<ExtField> fields_;
};

/// True iff Q has a nontrivial factor over some F_{p^d}, d <= d_max.
inline bool factor_oracle(const FpPoly& Q, unsigned d_max, u64 element_budget = ExtField::default_element_budget,
                          u64 candidate_budget = FactorOracle::default_candidate_budget) {
    return FactorOracle(Q.field().prime(), d_max, element_budget, candidate_budget).has_factor(Q);
}

}  // namespace sumprod

#endif  // SUMPROD_FACTOR_ORACLE_HPP
