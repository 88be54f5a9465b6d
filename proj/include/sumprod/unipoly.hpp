#ifndef SUMPROD_UNIPOLY_HPP
#define SUMPROD_UNIPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace sumprod {

/// Univariate polynomial over a finite field. Coefficients are stored densely
/// by degree and trimmed, so the leading stored coefficient is never zero and
/// the zero polynomial has no coefficients (degree() == -1).
template <FiniteField F>
class UniPoly {
public:
    using field_type = F;
    using value_type = typename F::value_type;

    static constexpr int zero_degree = -1;

    explicit UniPoly(F field) : field_(std::move(field)) {}
    UniPoly(F field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const F& field, value_type c) { return UniPoly(field, {c}); }
    static UniPoly monomial(const F& field, value_type c, int degree) {
        std::vector<value_type> v(static_cast<std::size_t>(degree) + 1, field.zero());
        v.back() = c;
        return UniPoly(field, std::move(v));
    }
    /// x - root
    static UniPoly linear_root(const F& field, value_type root) { return UniPoly(field, {field.neg(root), field.one()}); }

    const F& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<value_type>& coeffs() const noexcept { return c_; }
    value_type coeff(int i) const noexcept {
        return (i < 0 || i > degree()) ? field_.zero() : c_[static_cast<std::size_t>(i)];
    }
    value_type leading() const noexcept { return c_.empty() ? field_.zero() : c_.back(); }

    value_type eval(value_type x) const noexcept {
        value_type acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
        return acc;
    }

    UniPoly scaled(value_type s) const {
        std::vector<value_type> v(c_);
        for (auto& c : v) c = field_.mul(c, s);
        return UniPoly(field_, std::move(v));
    }
    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading()));
    }
    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(field_);
        std::vector<value_type> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_.mul(field_.from_int(static_cast<i64>(i % field_.characteristic())), c_[i]);
        return UniPoly(field_, std::move(v));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        const auto& f = a.field_;
        std::vector<value_type> v(std::max(a.c_.size(), b.c_.size()), f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = f.add(v[i], b.c_[i]);
        return UniPoly(f, std::move(v));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        const auto& f = a.field_;
        std::vector<value_type> v(std::max(a.c_.size(), b.c_.size()), f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = f.sub(v[i], b.c_[i]);
        return UniPoly(f, std::move(v));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        const auto& f = a.field_;
        if (a.is_zero() || b.is_zero()) return UniPoly(f);
        std::vector<value_type> v(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == f.zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return UniPoly(f, std::move(v));
    }

    /// Euclidean division; divisor must be nonzero.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        const auto& f = a.field_;
        if (b.is_zero()) fail(ErrorCode::zero_polynomial, "division by the zero polynomial");
        if (a.degree() < b.degree()) return {UniPoly(f), a};
        std::vector<value_type> r(a.c_);
        std::vector<value_type> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, f.zero());
        const value_type lead_inv = f.inv(b.leading());
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            const value_type t = f.mul(r[k + db], lead_inv);
            q[k] = t;
            if (t == f.zero()) continue;
            for (std::size_t j = 0; j <= db; ++j) r[k + j] = f.sub(r[k + j], f.mul(t, b.c_[j]));
        }
        return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept { return a.c_ == b.c_; }

    std::string to_string(char var = 'x') const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const value_type c = c_[static_cast<std::size_t>(i)];
            if (c == field_.zero()) continue;
            if (!out.empty()) out += '+';
            const bool unit = (c == field_.one());
            if (!unit || i == 0) out += std::to_string(c);
            if (i > 0) {
                if (!unit) out += '*';
                out += var;
                if (i > 1) out += '^' + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == field_.zero()) c_.pop_back();
    }

    F field_;
    std::vector<value_type> c_;
};

/// Monic greatest common divisor. Errors when both inputs are zero.
template <FiniteField F>
UniPoly<F> uni_gcd(UniPoly<F> a, UniPoly<F> b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::zero_polynomial, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <FiniteField F>
UniPoly<F> pow_mod(UniPoly<F> base, u64 exponent, const UniPoly<F>& modulus) {
    UniPoly<F> result = UniPoly<F>::constant(base.field(), base.field().one()) % modulus;
    base = base % modulus;
    while (exponent != 0) {
        if (exponent & 1u) result = (result * base) % modulus;
        base = (base * base) % modulus;
        exponent >>= 1;
    }
    return result;
}

/// Rabin's test over the field of the coefficients.
template <FiniteField F>
bool is_irreducible(const UniPoly<F>& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const auto& field = f.field();
    const u64 q = field.order();
    const auto x = UniPoly<F>::monomial(field, field.one(), 1);
    // x^(q^k) mod f for k = 1..d
    std::vector<UniPoly<F>> frob;
    frob.reserve(static_cast<std::size_t>(d));
    UniPoly<F> cur = x;
    for (int k = 1; k <= d; ++k) {
        cur = pow_mod(cur, q, f);
        frob.push_back(cur);
    }
    if (!((frob.back() - x) % f).is_zero()) return false;
    for (u64 r : nt::distinct_prime_factors(static_cast<u64>(d))) {
        const auto& g = frob[static_cast<std::size_t>(static_cast<u64>(d) / r) - 1];
        if (uni_gcd(f, g - x).degree() > 0) return false;
    }
    return true;
}

/// scalar * prod(factor^multiplicity), factors monic, squarefree, pairwise coprime.
template <FiniteField F>
struct SquarefreeDecomposition {
    struct Part {
        UniPoly<F> factor;
        int multiplicity;
    };
    typename F::value_type scalar;
    std::vector<Part> parts;  // ascending multiplicity

    UniPoly<F> reconstruct(const F& field) const {
        auto out = UniPoly<F>::constant(field, scalar);
        for (const auto& part : parts)
            for (int k = 0; k < part.multiplicity; ++k) out = out * part.factor;
        return out;
    }
};

/// Yun's algorithm. Valid while the degree stays below the characteristic.
template <FiniteField F>
SquarefreeDecomposition<F> squarefree_decomposition(const UniPoly<F>& f) {
    const auto& field = f.field();
    if (f.degree() < 1) fail(ErrorCode::constant_polynomial, "squarefree decomposition needs degree >= 1");
    if (static_cast<u64>(f.degree()) >= field.characteristic())
        fail(ErrorCode::degree_vs_characteristic, "degree " + std::to_string(f.degree()) + " >= characteristic");
    SquarefreeDecomposition<F> out{f.leading(), {}};
    const auto g = f.monic();
    const auto dg = g.derivative();
    auto a = uni_gcd(g, dg);
    auto b = g / a;
    auto c = dg / a;
    auto d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        a = uni_gcd(b, d);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        if (a.degree() > 0) out.parts.push_back({a, i});
    }
    return out;
}

namespace detail {

template <FiniteField F>
UniPoly<F> pth_root_poly(const UniPoly<F>& f) {
    const auto& field = f.field();
    const u64 p = field.characteristic();
    std::vector<typename F::value_type> v(static_cast<std::size_t>(f.degree()) / p + 1, field.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field.pth_root(f.coeff(static_cast<int>(i * p)));
    return UniPoly<F>(field, std::move(v));
}

// f monic, deg >= 1; appends (factor, multiplicity * scale) pairs.
template <FiniteField F>
void squarefree_char_p(const UniPoly<F>& f, int scale, std::map<int, UniPoly<F>>& acc) {
    const auto& field = f.field();
    const int p = static_cast<int>(std::min<u64>(field.characteristic(), 1u << 30));
    auto record = [&](const UniPoly<F>& factor, int mult) {
        auto it = acc.find(mult);
        if (it == acc.end())
            acc.emplace(mult, factor);
        else
            it->second = it->second * factor;
    };
    const auto df = f.derivative();
    if (df.is_zero()) {
        squarefree_char_p(pth_root_poly(f), scale * p, acc);
        return;
    }
    auto c = uni_gcd(f, df);
    auto w = f / c;
    for (int i = 1; w.degree() > 0; ++i) {
        auto y = uni_gcd(w, c);
        auto fac = w / y;
        if (fac.degree() > 0) record(fac, i * scale);
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_char_p(pth_root_poly(c), scale * p, acc);
}

}  // namespace detail

/// Squarefree decomposition valid in every characteristic (p-th roots are taken
/// when the derivative vanishes). Agrees with squarefree_decomposition whenever
/// the latter is defined.
template <FiniteField F>
SquarefreeDecomposition<F> squarefree_decomposition_any(const UniPoly<F>& f) {
    if (f.degree() < 1) fail(ErrorCode::constant_polynomial, "squarefree decomposition needs degree >= 1");
    std::map<int, UniPoly<F>> acc;
    detail::squarefree_char_p(f.monic(), 1, acc);
    SquarefreeDecomposition<F> out{f.leading(), {}};
    for (auto& [mult, factor] : acc) out.parts.push_back({factor.monic(), mult});
    return out;
}

/// Product of the distinct monic irreducible factors.
template <FiniteField F>
UniPoly<F> squarefree_part(const UniPoly<F>& f) {
    if (f.is_zero()) fail(ErrorCode::zero_polynomial, "squarefree part of zero");
    auto out = UniPoly<F>::constant(f.field(), f.field().one());
    if (f.degree() < 1) return out;
    for (const auto& part : squarefree_decomposition_any(f).parts) out = out * part.factor;
    return out;
}

}  // namespace sumprod

#endif  // SUMPROD_UNIPOLY_HPP
