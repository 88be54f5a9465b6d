#ifndef SUMPROD_SUBGROUP_HPP
#define SUMPROD_SUBGROUP_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace sumprod {

/// Membership bitmap over [0, p).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(u64 size) : size_(size), words_((size + 63) / 64, 0) {}

    void set(u64 i) noexcept { words_[i >> 6] |= u64{1} << (i & 63); }
    bool test(u64 i) const noexcept { return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1u) != 0; }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }
    u64 size() const noexcept { return size_; }
    u64 count() const noexcept {
        u64 n = 0;
        for (u64 w : words_) n += static_cast<u64>(__builtin_popcountll(w));
        return n;
    }

private:
    u64 size_ = 0;
    std::vector<u64> words_;
};

/// Multiplicative subgroup of F_p^*; F_p^* is cyclic so the order determines it.
class Subgroup {
public:
    Subgroup(Prime p, u64 order) : p_(p), order_(order) {
        if (order == 0 || (p - 1) % order != 0)
            fail(ErrorCode::invalid_argument, std::to_string(order) + " does not divide p - 1 = " + std::to_string(p - 1));
        generator_ = nt::pow_mod(primitive_root(p), (p - 1) / order, p);
        elements_.reserve(order);
        u64 x = 1;
        for (u64 k = 0; k < order; ++k) {
            elements_.push_back(x);
            x = nt::mul_mod(x, generator_, p);
        }
        std::sort(elements_.begin(), elements_.end());
        auto bits = std::make_shared<Bitset>(p.value());
        for (u64 v : elements_) bits->set(v);
        members_ = std::move(bits);
    }

    Prime prime() const noexcept { return p_; }
    u64 order() const noexcept { return order_; }
    u64 cofactor() const noexcept { return (p_ - 1) / order_; }
    u64 generator() const noexcept { return generator_; }
    const std::vector<u64>& elements() const noexcept { return elements_; }
    bool contains(u64 v) const noexcept { return members_->test(v); }
    const Bitset& membership() const noexcept { return *members_; }

    /// a and b (nonzero) share a coset iff a^|G| = b^|G|.
    u64 coset_key(u64 v) const noexcept { return nt::pow_mod(v, order_, p_); }

private:
    Prime p_;
    u64 order_;
    u64 generator_ = 1;
    std::vector<u64> elements_;
    std::shared_ptr<const Bitset> members_;
};

/// One subgroup per divisor of p - 1, ascending order.
inline std::vector<Subgroup> enumerate_subgroups(Prime p) {
    std::vector<Subgroup> out;
    for (u64 d : nt::divisors(p - 1)) out.emplace_back(p, d);
    return out;
}

/// 100 n^3 < |G| and 9 |G|^2 < p.
inline bool is_admitted(const Subgroup& G, u64 n) {
    if (n < 1) fail(ErrorCode::invalid_argument, "n must be >= 1");
    const u128 cube = static_cast<u128>(n) * n * n * 100;
    const u128 g = G.order();
    return cube < g && 9 * g * g < static_cast<u128>(G.prime().value());
}

struct Coset {
    u64 representative = 0;  // smallest member
    std::vector<u64> members;
};

inline Coset coset_of(u64 v, const Subgroup& G) {
    const u64 p = G.prime();
    v %= p;
    if (v == 0) fail(ErrorCode::zero_value, "zero lies in no coset");
    Coset out;
    out.members.reserve(G.order());
    for (u64 g : G.elements()) out.members.push_back(nt::mul_mod(v, g, p));
    std::sort(out.members.begin(), out.members.end());
    out.representative = out.members.front();
    return out;
}

/// True iff c is a G-coset (right size, all quotients by the representative in G).
inline bool is_coset_of(const Coset& c, const Subgroup& G) {
    const u64 p = G.prime();
    if (c.members.size() != G.order() || c.representative == 0 || c.representative >= p) return false;
    const u64 rinv = nt::inv_mod(c.representative, p);
    for (u64 m : c.members)
        if (!G.contains(nt::mul_mod(m, rinv, p))) return false;
    return true;
}

struct CosetRow {
    u64 representative;
    std::vector<u64> values;  // sorted
};

struct CosetPartition {
    std::vector<CosetRow> rows;  // ascending representative
    bool contains_zero = false;
};

/// Arranges the nonzero values of S into rows, one per G-coset met.
inline CosetPartition coset_partition(const std::vector<u64>& S, const Subgroup& G) {
    const u64 p = G.prime();
    std::map<u64, std::vector<u64>> by_key;
    CosetPartition out;
    std::vector<u64> values(S);
    for (auto& v : values) v %= p;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (u64 v : values) {
        if (v == 0) {
            out.contains_zero = true;
            continue;
        }
        by_key[G.coset_key(v)].push_back(v);
    }
    for (auto& [key, row] : by_key) {
        u64 rep = p;
        for (u64 g : G.elements()) rep = std::min(rep, nt::mul_mod(row.front(), g, p));
        out.rows.push_back({rep, std::move(row)});
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const CosetRow& a, const CosetRow& b) { return a.representative < b.representative; });
    return out;
}

}  // namespace sumprod

#endif  // SUMPROD_SUBGROUP_HPP
