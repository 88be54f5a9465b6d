#ifndef SUMPROD_NUMBER_THEORY_HPP
#define SUMPROD_NUMBER_THEORY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace sumprod {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

namespace nt {

inline u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    if (m <= 0xFFFFFFFFull) return (a * b) % m;
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) noexcept {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) noexcept { return a >= b ? a - b : a + (m - b); }

inline u64 pow_mod(u64 base, u64 exponent, u64 m) noexcept {
    u64 result = 1 % m;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1u) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

// Deterministic for every 64-bit input: the first twelve prime bases suffice
// below 3.3e24.
inline bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : small) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto step = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (u64 q = 2; q < 1000 && q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            factor_into(n / q, out);
            return;
        }
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization as ascending (prime, exponent) pairs.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<u64> primes;
    detail::factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 q : primes) {
        if (!out.empty() && out.back().first == q)
            ++out.back().second;
        else
            out.emplace_back(q, 1u);
    }
    return out;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (auto [q, e] : factorize(n)) out.push_back(q);
    return out;
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [q, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 power = 1;
        for (unsigned k = 0; k < e; ++k) {
            power *= q;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Inverse of a modulo m via the extended Euclidean algorithm; requires gcd(a, m) = 1.
inline u64 inv_mod(u64 a, u64 m) noexcept {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

}  // namespace nt
}  // namespace sumprod

#endif  // SUMPROD_NUMBER_THEORY_HPP
