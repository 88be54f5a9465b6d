#ifndef SUMPROD_PREDICATES_HPP
#define SUMPROD_PREDICATES_HPP

#include <numeric>
#include <optional>
#include <string_view>
#include <vector>

#include "bipoly.hpp"
#include "error.hpp"
#include "unipoly.hpp"

namespace sumprod {

struct Homogeneity {
    bool homogeneous = false;
    std::optional<int> degree;  // set only when homogeneous
};

template <FiniteField F>
Homogeneity is_homogeneous(const BiPoly<F>& P) {
    if (P.is_zero()) fail(ErrorCode::zero_polynomial, "homogeneity of the zero polynomial");
    const int n = P.total_degree();
    for (const auto& [m, c] : P.terms())
        if (m.first + m.second != n) return {false, std::nullopt};
    return {true, n};
}

/// No nonconstant factor in x alone and none in y alone.
template <FiniteField F>
bool is_required(const BiPoly<F>& P) {
    if (P.is_zero()) fail(ErrorCode::zero_polynomial, "is_required of the zero polynomial");
    auto content = [&](const std::vector<UniPoly<F>>& parts) {
        UniPoly<F> g(P.field());
        for (const auto& q : parts) {
            if (q.is_zero()) continue;
            g = g.is_zero() ? q.monic() : uni_gcd(g, q);
            if (g.degree() == 0) break;
        }
        return g;
    };
    return content(P.coeffs_in_y()).degree() == 0 && content(P.coeffs_in_x()).degree() == 0;
}

/// h(t, 1) for homogeneous h.
template <FiniteField F>
UniPoly<F> dehomogenize(const BiPoly<F>& h) {
    std::vector<typename F::value_type> v(static_cast<std::size_t>(std::max(h.deg_x(), 0) + 1), h.field().zero());
    for (const auto& [m, c] : h.terms()) v[static_cast<std::size_t>(m.first)] = h.field().add(v[static_cast<std::size_t>(m.first)], c);
    return UniPoly<F>(h.field(), std::move(v));
}

struct ProperPower {
    bool is_power = false;
    int exponent = 1;  // largest m with h = c * g^m
};

/// Writes homogeneous h as c * prod L_i^{e_i} over linear forms of the closure
/// and returns m = gcd(e_i). The multiplicity of y is n - deg h(t,1); the
/// remaining ones (x included, as the root t = 0) come from the squarefree
/// decomposition of h(t,1). Degrees at or above the characteristic use the
/// p-th-root variant of the decomposition.
template <FiniteField F>
ProperPower proper_power_form(const BiPoly<F>& h) {
    const auto hom = is_homogeneous(h);
    if (!hom.homogeneous) fail(ErrorCode::not_homogeneous, h.to_string() + " is not homogeneous");
    const int n = *hom.degree;
    if (n < 1) fail(ErrorCode::constant_polynomial, "proper power form needs degree >= 1");
    const auto u = dehomogenize(h);
    int m = n - u.degree();  // multiplicity of y; gcd(0, k) = k
    if (u.degree() >= 1) {
        const bool small = static_cast<u64>(u.degree()) < h.field().characteristic();
        const auto sfd = small ? squarefree_decomposition(u) : squarefree_decomposition_any(u);
        for (const auto& part : sfd.parts) m = std::gcd(m, part.multiplicity);
    }
    return {m >= 2, m};
}

/// Absolute irreducibility of h - alpha for homogeneous h and alpha != 0.
template <FiniteField F>
bool abs_irreducible_shift(const BiPoly<F>& h, typename F::value_type alpha) {
    if (alpha == h.field().zero()) fail(ErrorCode::zero_shift, "shift alpha must be nonzero");
    return !proper_power_form(h).is_power;
}

enum class GoodReason { good, not_homogeneous, reducible_shift, axes_vanish };

constexpr std::string_view to_string(GoodReason r) noexcept {
    switch (r) {
        case GoodReason::good: return "good";
        case GoodReason::not_homogeneous: return "not_homogeneous";
        case GoodReason::reducible_shift: return "reducible_shift";
        case GoodReason::axes_vanish: return "axes_vanish";
    }
    return "unknown";
}

struct GoodVerdict {
    bool good = false;
    GoodReason reason = GoodReason::not_homogeneous;  // first failing clause
    explicit operator bool() const noexcept { return good; }
};

/// Homogeneous, P - 1 absolutely irreducible, and P(x,0) or P(0,y) nonzero.
template <FiniteField F>
GoodVerdict is_good(const BiPoly<F>& P) {
    const auto hom = is_homogeneous(P);
    if (!hom.homogeneous) return {false, GoodReason::not_homogeneous};
    if (*hom.degree == 0 || !abs_irreducible_shift(P, P.field().one())) return {false, GoodReason::reducible_shift};
    const int n = *hom.degree;
    if (P.coeff(n, 0) == P.field().zero() && P.coeff(0, n) == P.field().zero()) return {false, GoodReason::axes_vanish};
    return {true, GoodReason::good};
}

struct PermissibleIndex {
    bool nonzero_free_term = false;
    bool private_root = false;
};

struct PermissibleVerdict {
    bool permissible = false;
    std::vector<PermissibleIndex> per_index;
    explicit operator bool() const noexcept { return permissible; }
};

/// Every f_i has f_i(0) != 0 and a closure root shared with no other member,
/// tested on squarefree parts: u_i with every common factor with u_j removed
/// must keep positive degree.
template <FiniteField F>
PermissibleVerdict is_permissible(const std::vector<UniPoly<F>>& fs) {
    if (fs.empty()) fail(ErrorCode::invalid_argument, "permissible set needs at least one polynomial");
    std::vector<UniPoly<F>> rad;
    rad.reserve(fs.size());
    for (const auto& f : fs) {
        if (f.is_zero()) fail(ErrorCode::zero_polynomial, "permissible set member is zero");
        rad.push_back(squarefree_part(f));
    }
    PermissibleVerdict out;
    out.permissible = true;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        PermissibleIndex diag;
        diag.nonzero_free_term = fs[i].coeff(0) != fs[i].field().zero();
        auto own = rad[i];
        for (std::size_t j = 0; j < fs.size() && own.degree() > 0; ++j) {
            if (j == i) continue;
            const auto g = uni_gcd(own, rad[j]);
            if (g.degree() > 0) own = own / g;
        }
        diag.private_root = own.degree() > 0;
        out.permissible = out.permissible && diag.nonzero_free_term && diag.private_root;
        out.per_index.push_back(diag);
    }
    return out;
}

}  // namespace sumprod

#endif  // SUMPROD_PREDICATES_HPP
