#ifndef SUMPROD_SETOPS_HPP
#define SUMPROD_SETOPS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "bipoly.hpp"
#include "error.hpp"
#include "subgroup.hpp"

namespace sumprod {

inline constexpr u64 default_pair_budget = 100'000'000;

/// Deduplicated sorted residues mod p.
class ValueSet {
public:
    explicit ValueSet(Prime p) : p_(p) {}
    ValueSet(Prime p, std::vector<u64> values) : p_(p), members_(std::move(values)) {
        for (auto& v : members_) v %= p_;
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }
    static ValueSet of(const Subgroup& G) { return ValueSet(G.prime(), G.elements()); }

    Prime prime() const noexcept { return p_; }
    const std::vector<u64>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(u64 v) const noexcept { return std::binary_search(members_.begin(), members_.end(), v); }
    friend bool operator==(const ValueSet&, const ValueSet&) = default;

private:
    Prime p_;
    std::vector<u64> members_;
};

namespace detail {

inline void check_pairs(u64 a, u64 b, u64 budget) {
    if (a != 0 && b > budget / a)
        fail(ErrorCode::size_budget, std::to_string(a) + " x " + std::to_string(b) + " pairs exceed budget " + std::to_string(budget));
}

inline void check_same_prime(Prime a, Prime b) {
    if (a != b) fail(ErrorCode::invalid_argument, "sets live over different primes");
}

// Collects residues either in a bitmap (moderate p) or by sort + unique.
class ResidueCollector {
public:
    static constexpr u64 bitmap_limit = u64{1} << 28;

    explicit ResidueCollector(Prime p) : p_(p) {
        if (p <= bitmap_limit) bits_ = Bitset(p);
    }
    void add(u64 v) {
        if (bits_.size() != 0)
            bits_.set(v);
        else
            list_.push_back(v);
    }
    ValueSet finish() {
        if (bits_.size() == 0) return ValueSet(p_, std::move(list_));
        std::vector<u64> out;
        out.reserve(static_cast<std::size_t>(bits_.count()));
        for (u64 v = 0; v < p_; ++v)
            if (bits_.test(v)) out.push_back(v);
        return ValueSet(p_, std::move(out));
    }

private:
    Prime p_;
    Bitset bits_;
    std::vector<u64> list_;
};

}  // namespace detail

/// P(A, B) = {P(a, b) : a in A, b in B} by full enumeration.
inline ValueSet image(const FpPoly& P, const ValueSet& A, const ValueSet& B, u64 max_pairs = default_pair_budget) {
    detail::check_same_prime(A.prime(), B.prime());
    detail::check_same_prime(P.field().prime(), A.prime());
    detail::check_pairs(A.size(), B.size(), max_pairs);
    detail::ResidueCollector out(A.prime());
    PairEvaluator ev(P);
    for (u64 a : A.members()) {
        ev.set_x(a);
        for (u64 b : B.members()) out.add(ev.at_y(b));
    }
    return out.finish();
}

enum class Sign { plus, minus };

inline ValueSet sumset(const ValueSet& A, const ValueSet& B, Sign sign = Sign::plus, u64 max_pairs = default_pair_budget) {
    detail::check_same_prime(A.prime(), B.prime());
    detail::check_pairs(A.size(), B.size(), max_pairs);
    const u64 p = A.prime();
    detail::ResidueCollector out(A.prime());
    for (u64 a : A.members())
        for (u64 b : B.members()) out.add(sign == Sign::plus ? nt::add_mod(a, b, p) : nt::sub_mod(a, b, p));
    return out.finish();
}

/// |G ∩ (G + mu)| = #{g in G : g - mu in G}.
inline u64 shift_intersection(const Subgroup& G, u64 mu) {
    const u64 p = G.prime();
    mu %= p;
    if (mu == 0) fail(ErrorCode::zero_shift, "shift mu must be nonzero");
    u64 count = 0;
    for (u64 g : G.elements()) count += G.contains(nt::sub_mod(g, mu, p)) ? 1 : 0;
    return count;
}

/// M = {x in F_p : f_i(x) in coset_i for every i}.
inline ValueSet fiber_set(const std::vector<FpUniPoly>& fs, const std::vector<Coset>& cosets, u64 max_evaluations = default_pair_budget) {
    if (fs.size() != cosets.size())
        fail(ErrorCode::length_mismatch, std::to_string(fs.size()) + " polynomials vs " + std::to_string(cosets.size()) + " cosets");
    if (fs.empty()) fail(ErrorCode::invalid_argument, "fiber set needs at least one polynomial");
    const Prime p = fs.front().field().prime();
    detail::check_pairs(p, fs.size(), max_evaluations);
    std::vector<Bitset> members;
    members.reserve(cosets.size());
    for (const auto& c : cosets) {
        Bitset b(p);
        for (u64 v : c.members) b.set(v % p);
        members.push_back(std::move(b));
    }
    std::vector<u64> out;
    for (u64 x = 0; x < p; ++x) {
        bool in = true;
        for (std::size_t i = 0; i < fs.size() && in; ++i) in = members[i].test(fs[i].eval(x));
        if (in) out.push_back(x);
    }
    return ValueSet(p, std::move(out));
}

/// #{(x, y) in G x G : P(x, y) = 0}.
inline u64 count_zero_pairs(const FpPoly& P, const Subgroup& G, u64 max_pairs = default_pair_budget) {
    if (P.is_zero()) fail(ErrorCode::zero_polynomial, "count_zero_pairs of the zero polynomial");
    detail::check_pairs(G.order(), G.order(), max_pairs);
    PairEvaluator ev(P);
    u64 count = 0;
    for (u64 x : G.elements()) {
        ev.set_x(x);
        for (u64 y : G.elements()) count += ev.at_y(y) == 0 ? 1 : 0;
    }
    return count;
}

struct PairCount {
    u64 total = 0;
    std::map<u64, u64> per_level;  // every requested level present, possibly 0
};

/// Pairs in G x G hitting each level alpha; levels must be nonzero and lie in
/// pairwise distinct G-cosets.
inline PairCount count_level_pairs(const FpPoly& P, const Subgroup& G, const ValueSet& alphas, u64 max_pairs = default_pair_budget) {
    detail::check_same_prime(alphas.prime(), G.prime());
    const u64 p = G.prime();
    std::map<u64, u64> coset_owner;
    for (u64 a : alphas.members()) {
        if (a == 0) fail(ErrorCode::zero_level, "level 0 is not allowed");
        auto [it, inserted] = coset_owner.emplace(G.coset_key(a), a);
        if (!inserted)
            fail(ErrorCode::coset_collision, "levels " + std::to_string(it->second) + " and " + std::to_string(a) + " share a G-coset");
    }
    detail::check_pairs(G.order(), G.order(), max_pairs);

    PairCount out;
    for (u64 a : alphas.members()) out.per_level[a] = 0;
    if (alphas.empty()) return out;

    std::vector<u64> counts(alphas.size(), 0);
    PairEvaluator ev(P);
    auto tally = [&](auto&& index_of) {
        for (u64 x : G.elements()) {
            ev.set_x(x);
            for (u64 y : G.elements()) {
                const long long idx = index_of(ev.at_y(y));
                if (idx >= 0) ++counts[static_cast<std::size_t>(idx)];
            }
        }
    };
    if (p <= (u64{1} << 26)) {
        std::vector<std::int32_t> index(p, -1);
        for (std::size_t k = 0; k < alphas.size(); ++k) index[alphas.members()[k]] = static_cast<std::int32_t>(k);
        tally([&](u64 v) { return static_cast<long long>(index[v]); });
    } else {
        std::unordered_map<u64, std::size_t> index;
        for (std::size_t k = 0; k < alphas.size(); ++k) index.emplace(alphas.members()[k], k);
        tally([&](u64 v) {
            auto it = index.find(v);
            return it == index.end() ? -1LL : static_cast<long long>(it->second);
        });
    }
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        out.per_level[alphas.members()[k]] = counts[k];
        out.total += counts[k];
    }
    return out;
}

}  // namespace sumprod

#endif  // SUMPROD_SETOPS_HPP
