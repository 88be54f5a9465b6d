#ifndef SUMPROD_TESTS_SUPPORT_HPP
#define SUMPROD_TESTS_SUPPORT_HPP

#include <set>
#include <string>
#include <vector>

#include <sumprod/sumprod.hpp>

namespace testing_support {

using sumprod::u64;

inline sumprod::FpPoly poly(const std::string& text, u64 p) { return sumprod::parse_bipoly(text, sumprod::make_prime(p)); }

inline sumprod::FpUniPoly uni(std::vector<u64> coeffs, u64 p) {
    return sumprod::FpUniPoly(sumprod::PrimeField(sumprod::make_prime(p)), std::move(coeffs));
}

inline bool trial_division_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Powers of g modulo p until they return to 1.
inline std::set<u64> cyclic_closure(u64 g, u64 p) {
    std::set<u64> s;
    u64 x = 1;
    do {
        s.insert(x);
        x = x * g % p;
    } while (x != 1);
    return s;
}

inline std::set<u64> as_set(const std::vector<u64>& v) { return {v.begin(), v.end()}; }

}  // namespace testing_support

#endif  // SUMPROD_TESTS_SUPPORT_HPP
