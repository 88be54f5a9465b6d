#ifndef SUMPROD_FIELD_HPP
#define SUMPROD_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace sumprod {

/// An odd prime, certified at construction. Only make_prime creates one.
class Prime {
public:
    constexpr u64 value() const noexcept { return value_; }
    constexpr operator u64() const noexcept { return value_; }
    friend constexpr bool operator==(Prime, Prime) = default;
    friend constexpr auto operator<=>(Prime, Prime) = default;

private:
    explicit constexpr Prime(u64 v) noexcept : value_(v) {}
    friend Prime make_prime(u64 n);
    u64 value_;
};

inline Prime make_prime(u64 n) {
    if (n < 3) fail(ErrorCode::invalid_argument, "prime must be at least 3, got " + std::to_string(n));
    if (!nt::is_prime(n)) fail(ErrorCode::composite_input, std::to_string(n) + " is not prime");
    return Prime(n);
}

/// Operations every coefficient field provides. Elements are integer codes in
/// [0, order()); codes below characteristic() are the prime-field constants.
template <class F>
concept FiniteField = requires(const F& f, typename F::value_type a, u64 e, i64 k) {
    typename F::value_type;
    { f.characteristic() } -> std::convertible_to<u64>;
    { f.order() } -> std::convertible_to<u64>;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(k) } -> std::same_as<typename F::value_type>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.sub(a, a) } -> std::same_as<typename F::value_type>;
    { f.neg(a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.pow(a, e) } -> std::same_as<typename F::value_type>;
    { f.pth_root(a) } -> std::same_as<typename F::value_type>;
};

/// Arithmetic context for F_p. Residues are plain integers in [0, p).
class PrimeField {
public:
    using value_type = u64;

    explicit PrimeField(Prime p) noexcept : p_(p) {}

    Prime prime() const noexcept { return p_; }
    u64 characteristic() const noexcept { return p_.value(); }
    u64 order() const noexcept { return p_.value(); }
    unsigned degree() const noexcept { return 1; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(i64 k) const noexcept {
        const i64 m = static_cast<i64>(p_.value());
        if (p_.value() > static_cast<u64>(INT64_MAX)) {
            return k >= 0 ? static_cast<u64>(k) % p_.value()
                          : p_.value() - (static_cast<u64>(-(k + 1)) % p_.value()) - 1;
        }
        i64 r = k % m;
        return static_cast<u64>(r < 0 ? r + m : r);
    }
    value_type from_uint(u64 k) const noexcept { return k % p_.value(); }

    value_type add(value_type a, value_type b) const noexcept { return nt::add_mod(a, b, p_.value()); }
    value_type sub(value_type a, value_type b) const noexcept { return nt::sub_mod(a, b, p_.value()); }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_.value() - a; }
    value_type mul(value_type a, value_type b) const noexcept { return nt::mul_mod(a, b, p_.value()); }
    value_type pow(value_type a, u64 e) const noexcept { return nt::pow_mod(a, e, p_.value()); }
    value_type inv(value_type a) const {
        if (a % p_.value() == 0) fail(ErrorCode::zero_inverse, "zero has no inverse");
        return nt::inv_mod(a, p_.value());
    }
    // Frobenius is the identity on F_p.
    value_type pth_root(value_type a) const noexcept { return a; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
    Prime p_;
};

/// Multiplicative order of a modulo p (a nonzero).
inline u64 multiplicative_order(u64 a, Prime p) {
    if (a % p == 0) fail(ErrorCode::zero_value, "zero has no multiplicative order");
    u64 order = p - 1;
    for (u64 q : nt::distinct_prime_factors(p - 1)) {
        while (order % q == 0 && nt::pow_mod(a, order / q, p) == 1) order /= q;
    }
    return order;
}

/// Smallest generator of F_p^*.
inline u64 primitive_root(Prime p) {
    const auto primes = nt::distinct_prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : primes) {
            if (nt::pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;  // unreachable for odd primes; p = 3 returns 2 above
}

/// Full discrete-logarithm table with respect to primitive_root(p).
class DlogTable {
public:
    static constexpr u64 max_prime = u64{1} << 22;

    explicit DlogTable(Prime p) : p_(p), generator_(primitive_root(p)) {
        if (p > max_prime) fail(ErrorCode::budget_exceeded, "discrete-log tables are limited to p <= 2^22");
        log_.assign(p, 0);
        exp_.resize(p - 1);
        u64 x = 1;
        for (u64 k = 0; k + 1 < p; ++k) {
            exp_[k] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(k);
            x = nt::mul_mod(x, generator_, p);
        }
    }

    Prime prime() const noexcept { return p_; }
    u64 generator() const noexcept { return generator_; }
    u64 log(u64 x) const {
        if (x % p_ == 0) fail(ErrorCode::zero_value, "log of zero");
        return log_[x % p_];
    }
    u64 exp(u64 k) const noexcept { return exp_[k % (p_ - 1)]; }

private:
    Prime p_;
    u64 generator_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

}  // namespace sumprod

#endif  // SUMPROD_FIELD_HPP
