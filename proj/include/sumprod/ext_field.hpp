#ifndef SUMPROD_EXT_FIELD_HPP
#define SUMPROD_EXT_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "unipoly.hpp"

namespace sumprod {

/// F_{p^d} for d <= 6, built over the lexicographically smallest monic
/// irreducible modulus (coefficients compared constant term first).
///
/// An element is the integer code sum_i c_i p^i of its coefficient vector
/// (c_0, ..., c_{d-1}) in the power basis of F_p[t]/(modulus). Codes below p
/// are the prime-field constants, so polynomials over F_p lift verbatim.
/// Multiplication runs through exp/log tables over a primitive element;
/// handles are cheap to copy and immutable.
class ExtField {
public:
    using value_type = u64;

    static constexpr unsigned max_degree = 6;
    static constexpr u64 default_element_budget = u64{1} << 17;

    ExtField(Prime p, unsigned d, u64 element_budget = default_element_budget) : t_(build(p, d, element_budget)) {}

    Prime prime() const noexcept { return t_->p; }
    u64 characteristic() const noexcept { return t_->p.value(); }
    u64 order() const noexcept { return t_->q; }
    unsigned degree() const noexcept { return t_->d; }
    const UniPoly<PrimeField>& modulus() const noexcept { return t_->modulus; }
    value_type generator() const noexcept { return t_->exp[1 % t_->exp.size()]; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(i64 k) const noexcept { return PrimeField(t_->p).from_int(k); }

    std::vector<u64> coeffs(value_type a) const {
        std::vector<u64> out(t_->d);
        for (unsigned i = 0; i < t_->d; ++i) out[i] = digit(a, i);
        return out;
    }
    value_type from_coeffs(const std::vector<u64>& c) const {
        value_type code = 0;
        for (unsigned i = t_->d; i-- > 0;) code = code * t_->p + (i < c.size() ? c[i] % t_->p : 0);
        return code;
    }

    value_type add(value_type a, value_type b) const noexcept {
        const u64 p = t_->p;
        value_type code = 0;
        for (unsigned i = 0; i < t_->d; ++i) {
            u64 s = digit(a, i) + digit(b, i);
            if (s >= p) s -= p;
            code += s * t_->place[i];
        }
        return code;
    }
    value_type neg(value_type a) const noexcept {
        const u64 p = t_->p;
        value_type code = 0;
        for (unsigned i = 0; i < t_->d; ++i) {
            const u64 c = digit(a, i);
            code += (c == 0 ? 0 : p - c) * t_->place[i];
        }
        return code;
    }
    value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }
    value_type mul(value_type a, value_type b) const noexcept {
        if (a == 0 || b == 0) return 0;
        const u64 n = t_->q - 1;
        u64 k = u64{t_->log[a]} + t_->log[b];
        if (k >= n) k -= n;
        return t_->exp[k];
    }
    value_type inv(value_type a) const {
        if (a == 0) fail(ErrorCode::zero_inverse, "zero has no inverse");
        const u64 n = t_->q - 1;
        return t_->exp[(n - t_->log[a]) % n];
    }
    value_type pow(value_type a, u64 e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const u64 n = t_->q - 1;
        return t_->exp[static_cast<u64>(static_cast<u128>(t_->log[a]) * (e % n) % n)];
    }
    value_type pth_root(value_type a) const noexcept { return pow(a, t_->q / t_->p); }

    friend bool operator==(const ExtField& a, const ExtField& b) noexcept {
        return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->d == b.t_->d);
    }

private:
    struct Tables {
        Prime p;
        unsigned d;
        u64 q;
        UniPoly<PrimeField> modulus;
        std::vector<u64> place;            // p^i
        std::vector<std::uint32_t> digits;  // q * d
        std::vector<std::uint32_t> exp;     // q - 1
        std::vector<std::uint32_t> log;     // q
    };

    u64 digit(value_type a, unsigned i) const noexcept { return t_->digits[a * t_->d + i]; }

    static std::shared_ptr<const Tables> build(Prime p, unsigned d, u64 budget) {
        if (d < 1 || d > max_degree)
            fail(ErrorCode::invalid_argument, "extension degree must lie in [1, 6], got " + std::to_string(d));
        u64 q = 1;
        for (unsigned i = 0; i < d; ++i) {
            if (q > budget / p) fail(ErrorCode::budget_exceeded, "p^d exceeds element budget " + std::to_string(budget));
            q *= p;
        }
        if (q > budget) fail(ErrorCode::budget_exceeded, "p^d exceeds element budget " + std::to_string(budget));

        const PrimeField fp(p);
        auto t = std::make_shared<Tables>(Tables{p, d, q, UniPoly<PrimeField>(fp), {}, {}, {}, {}});
        t->place.resize(d);
        for (unsigned i = 0; i < d; ++i) t->place[i] = i == 0 ? 1 : t->place[i - 1] * p;

        // Candidate k lists (c_0, ..., c_{d-1}) with c_0 most significant.
        for (u64 k = 0; k < q; ++k) {
            std::vector<u64> c(d + 1, 0);
            u64 rest = k;
            for (unsigned i = d; i-- > 0;) {
                c[i] = rest % p;
                rest /= p;
            }
            c[d] = 1;
            UniPoly<PrimeField> cand(fp, c);
            if (is_irreducible(cand)) {
                t->modulus = cand;
                break;
            }
        }

        t->digits.resize(q * d);
        for (u64 a = 0; a < q; ++a) {
            u64 rest = a;
            for (unsigned i = 0; i < d; ++i) {
                t->digits[a * d + i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
        }

        auto to_poly = [&](u64 code) {
            std::vector<u64> c(d);
            for (unsigned i = 0; i < d; ++i) c[i] = t->digits[code * d + i];
            return UniPoly<PrimeField>(fp, std::move(c));
        };
        auto to_code = [&](const UniPoly<PrimeField>& f) {
            u64 code = 0;
            for (unsigned i = d; i-- > 0;) code = code * p + f.coeff(static_cast<int>(i));
            return code;
        };

        // Smallest code of multiplicative order q - 1.
        const auto order_primes = nt::distinct_prime_factors(q - 1);
        UniPoly<PrimeField> gen(fp);
        for (u64 g = 1; g < q; ++g) {
            const auto cand = to_poly(g);
            bool ok = true;
            for (u64 r : order_primes) {
                const auto powered = pow_mod(cand, (q - 1) / r, t->modulus);
                if (powered.degree() == 0 && powered.coeff(0) == 1) {
                    ok = false;
                    break;
                }
            }
            if (q == 2 || ok) {
                gen = cand;
                break;
            }
        }

        t->exp.resize(q - 1);
        t->log.assign(q, 0);
        auto cur = UniPoly<PrimeField>::constant(fp, 1);
        for (u64 k = 0; k + 1 < q; ++k) {
            const u64 code = to_code(cur);
            t->exp[k] = static_cast<std::uint32_t>(code);
            t->log[code] = static_cast<std::uint32_t>(k);
            cur = (cur * gen) % t->modulus;
        }
        return t;
    }

    std::shared_ptr<const Tables> t_;
};

/// The extension handle F_{p^d}; d = 1 yields F_p itself under the same interface.
inline ExtField ext_field(Prime p, unsigned d, u64 element_budget = ExtField::default_element_budget) {
    return ExtField(p, d, element_budget);
}

}  // namespace sumprod

#endif  // SUMPROD_EXT_FIELD_HPP
