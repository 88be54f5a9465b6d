#ifndef SUMPROD_BIPOLY_HPP
#define SUMPROD_BIPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "unipoly.hpp"

namespace sumprod {

/// Sparse bivariate polynomial: (x-degree, y-degree) -> nonzero coefficient.
/// deg_x, deg_y and the total degree are -1 for the zero polynomial.
template <FiniteField F>
class BiPoly {
public:
    using field_type = F;
    using value_type = typename F::value_type;
    using Monomial = std::pair<int, int>;
    using Terms = std::map<Monomial, value_type>;

    explicit BiPoly(F field) : field_(std::move(field)) {}
    BiPoly(F field, const Terms& terms) : field_(std::move(field)) {
        for (const auto& [m, c] : terms) add_term(m.first, m.second, c);
    }

    static BiPoly constant(const F& field, value_type c) {
        BiPoly out(field);
        out.add_term(0, 0, c);
        return out;
    }
    static BiPoly x(const F& field) { return monomial(field, field.one(), 1, 0); }
    static BiPoly y(const F& field) { return monomial(field, field.one(), 0, 1); }
    static BiPoly monomial(const F& field, value_type c, int i, int j) {
        BiPoly out(field);
        out.add_term(i, j, c);
        return out;
    }

    const F& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int deg_x() const noexcept { return deg_x_; }
    int deg_y() const noexcept { return deg_y_; }
    int total_degree() const noexcept { return deg_; }

    value_type coeff(int i, int j) const noexcept {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? field_.zero() : it->second;
    }

    void add_term(int i, int j, value_type c) {
        if (i < 0 || j < 0) fail(ErrorCode::invalid_argument, "negative exponent");
        if (c == field_.zero()) return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (it->second == field_.zero()) terms_.erase(it);
        }
        refresh();
    }

    value_type eval(value_type a, value_type b) const noexcept {
        // Horner in x over each y-degree column.
        value_type acc = field_.zero();
        value_type ypow = field_.one();
        int j_prev = 0;
        for (const auto& column : by_y()) {
            for (; j_prev < column.first; ++j_prev) ypow = field_.mul(ypow, b);
            acc = field_.add(acc, field_.mul(column.second.eval(a), ypow));
        }
        return acc;
    }

    BiPoly scaled(value_type s) const {
        BiPoly out(field_);
        for (const auto& [m, c] : terms_) out.add_term(m.first, m.second, field_.mul(c, s));
        return out;
    }
    /// P - alpha
    BiPoly shifted(value_type alpha) const {
        BiPoly out(*this);
        out.add_term(0, 0, field_.neg(alpha));
        return out;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly out(a);
        for (const auto& [m, c] : b.terms_) out.add_term(m.first, m.second, c);
        return out;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly out(a);
        for (const auto& [m, c] : b.terms_) out.add_term(m.first, m.second, a.field_.neg(c));
        return out;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        const auto& f = a.field_;
        Terms acc;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                auto& slot = acc[{ma.first + mb.first, ma.second + mb.second}];
                slot = f.add(slot, f.mul(ca, cb));
            }
        return BiPoly(f, acc);
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept { return a.terms_ == b.terms_; }

    /// Columns q_j(x) with P = sum_j q_j(x) y^j, indexed j = 0..deg_y.
    std::vector<UniPoly<F>> coeffs_in_y() const {
        std::vector<std::vector<value_type>> cols(static_cast<std::size_t>(std::max(deg_y_, -1) + 1),
                                                  std::vector<value_type>(static_cast<std::size_t>(std::max(deg_x_, 0) + 1), field_.zero()));
        for (const auto& [m, c] : terms_) cols[static_cast<std::size_t>(m.second)][static_cast<std::size_t>(m.first)] = c;
        std::vector<UniPoly<F>> out;
        for (auto& col : cols) out.emplace_back(field_, std::move(col));
        return out;
    }
    /// Rows p_i(y) with P = sum_i p_i(y) x^i, indexed i = 0..deg_x.
    std::vector<UniPoly<F>> coeffs_in_x() const {
        std::vector<std::vector<value_type>> rows(static_cast<std::size_t>(std::max(deg_x_, -1) + 1),
                                                  std::vector<value_type>(static_cast<std::size_t>(std::max(deg_y_, 0) + 1), field_.zero()));
        for (const auto& [m, c] : terms_) rows[static_cast<std::size_t>(m.first)][static_cast<std::size_t>(m.second)] = c;
        std::vector<UniPoly<F>> out;
        for (auto& row : rows) out.emplace_back(field_, std::move(row));
        return out;
    }

    /// P(x, y0) as a polynomial in x.
    UniPoly<F> at_y(value_type y0) const {
        std::vector<value_type> v(static_cast<std::size_t>(std::max(deg_x_, 0) + 1), field_.zero());
        std::vector<value_type> ypow(static_cast<std::size_t>(std::max(deg_y_, 0) + 1), field_.one());
        for (std::size_t j = 1; j < ypow.size(); ++j) ypow[j] = field_.mul(ypow[j - 1], y0);
        for (const auto& [m, c] : terms_) {
            auto& slot = v[static_cast<std::size_t>(m.first)];
            slot = field_.add(slot, field_.mul(c, ypow[static_cast<std::size_t>(m.second)]));
        }
        return UniPoly<F>(field_, std::move(v));
    }
    /// P(x0, y) as a polynomial in y.
    UniPoly<F> at_x(value_type x0) const {
        std::vector<value_type> v(static_cast<std::size_t>(std::max(deg_y_, 0) + 1), field_.zero());
        std::vector<value_type> xpow(static_cast<std::size_t>(std::max(deg_x_, 0) + 1), field_.one());
        for (std::size_t i = 1; i < xpow.size(); ++i) xpow[i] = field_.mul(xpow[i - 1], x0);
        for (const auto& [m, c] : terms_) {
            auto& slot = v[static_cast<std::size_t>(m.second)];
            slot = field_.add(slot, field_.mul(c, xpow[static_cast<std::size_t>(m.first)]));
        }
        return UniPoly<F>(field_, std::move(v));
    }

    /// Same coefficient codes over a field containing this one as prime subfield.
    template <FiniteField G>
    BiPoly<G> lifted(const G& target) const {
        BiPoly<G> out(target);
        for (const auto& [m, c] : terms_) out.add_term(m.first, m.second, c);
        return out;
    }

    /// Canonical text accepted by parse_bipoly: descending total degree, then
    /// descending x-degree; coefficients as residues.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::pair<Monomial, value_type>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
            if (da != db) return da > db;
            return a.first.first > b.first.first;
        });
        std::string out;
        for (const auto& [m, c] : v) {
            if (!out.empty()) out += '+';
            std::string mono;
            auto append = [&](char var, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += '*';
                mono += var;
                if (e > 1) mono += '^' + std::to_string(e);
            };
            append('x', m.first);
            append('y', m.second);
            if (mono.empty())
                out += std::to_string(c);
            else if (c == field_.one())
                out += mono;
            else
                out += std::to_string(c) + '*' + mono;
        }
        return out;
    }

private:
    std::vector<std::pair<int, UniPoly<F>>> by_y() const {
        std::map<int, std::vector<value_type>> cols;
        for (const auto& [m, c] : terms_) {
            auto& col = cols[m.second];
            if (col.size() <= static_cast<std::size_t>(m.first)) col.resize(static_cast<std::size_t>(m.first) + 1, field_.zero());
            col[static_cast<std::size_t>(m.first)] = c;
        }
        std::vector<std::pair<int, UniPoly<F>>> out;
        for (auto& [j, col] : cols) out.emplace_back(j, UniPoly<F>(field_, std::move(col)));
        return out;
    }

    void refresh() noexcept {
        deg_x_ = deg_y_ = deg_ = -1;
        for (const auto& [m, c] : terms_) {
            deg_x_ = std::max(deg_x_, m.first);
            deg_y_ = std::max(deg_y_, m.second);
            deg_ = std::max(deg_, m.first + m.second);
        }
    }

    F field_;
    Terms terms_;
    int deg_x_ = -1;
    int deg_y_ = -1;
    int deg_ = -1;
};

using FpPoly = BiPoly<PrimeField>;
using FpUniPoly = UniPoly<PrimeField>;

/// Precomputed evaluator for P over F_p used in the G x G and A x B loops:
/// per x it builds the y-column values, then runs Horner in y.
class PairEvaluator {
public:
    explicit PairEvaluator(const FpPoly& P) : field_(P.field()), columns_(P.coeffs_in_y()) {
        if (columns_.empty()) columns_.emplace_back(field_);
        row_.resize(columns_.size());
    }

    /// Loads the column values for a fixed x.
    void set_x(u64 x) noexcept {
        for (std::size_t j = 0; j < columns_.size(); ++j) row_[j] = columns_[j].eval(x);
    }
    u64 at_y(u64 y) const noexcept {
        u64 acc = 0;
        for (std::size_t j = row_.size(); j-- > 0;) acc = field_.add(field_.mul(acc, y), row_[j]);
        return acc;
    }

private:
    PrimeField field_;
    std::vector<FpUniPoly> columns_;
    std::vector<u64> row_;
};

}  // namespace sumprod

#endif  // SUMPROD_BIPOLY_HPP
