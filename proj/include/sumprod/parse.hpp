#ifndef SUMPROD_PARSE_HPP
#define SUMPROD_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "bipoly.hpp"
#include "error.hpp"

namespace sumprod {

/// Largest total degree any parsed (sub)expression may reach.
inline constexpr int max_parse_degree = 16;

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' uint)?
// atom   := 'x' | 'y' | uint | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, Prime p) : text_(text), field_(p) {}

    FpPoly parse() {
        auto out = expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    FpPoly expr() {
        auto acc = term();
        for (;;) {
            skip_ws();
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    FpPoly term() {
        auto acc = factor();
        for (;;) {
            skip_ws();
            if (!peek('*')) return acc;
            const std::size_t at = pos_++;
            auto rhs = factor();
            if (!acc.is_zero() && !rhs.is_zero() && acc.total_degree() + rhs.total_degree() > max_parse_degree)
                overflow(at);
            acc = acc * rhs;
        }
    }

    FpPoly factor() {
        auto base = atom();
        skip_ws();
        if (!peek('^')) return base;
        const std::size_t at = pos_++;
        skip_ws();
        const u64 e = exponent();
        if (base.total_degree() > 0) {
            if (e > static_cast<u64>(max_parse_degree) || static_cast<u64>(base.total_degree()) * e > static_cast<u64>(max_parse_degree))
                overflow(at);
        }
        if (base.total_degree() <= 0) return FpPoly::constant(field_, e == 0 ? 1 : field_.pow(base.coeff(0, 0), e));
        auto out = FpPoly::constant(field_, 1);
        for (u64 k = 0; k < e; ++k) out = out * base;
        return out;
    }

    FpPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == 'x') {
            ++pos_;
            return FpPoly::x(field_);
        }
        if (ch == 'y') {
            ++pos_;
            return FpPoly::y(field_);
        }
        if (ch == '(') {
            ++pos_;
            auto inner = expr();
            skip_ws();
            if (!peek(')')) error("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            u64 value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = field_.add(field_.mul(value, 10 % field_.characteristic()),
                                   static_cast<u64>(text_[pos_] - '0') % field_.characteristic());
                ++pos_;
            }
            return FpPoly::constant(field_, value);
        }
        error("unexpected character '" + std::string(1, ch) + "'");
    }

    u64 exponent() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected exponent");
        u64 value = 0;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > (u64{1} << 59)) error("exponent too large", start);
            value = value * 10 + static_cast<u64>(text_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    [[noreturn]] void error(const std::string& what) const { error(what, pos_); }
    [[noreturn]] void error(const std::string& what, std::size_t at) const {
        fail(ErrorCode::syntax_error, what + " at position " + std::to_string(at) + " in \"" + std::string(text_) + "\"");
    }
    [[noreturn]] void overflow(std::size_t at) const {
        fail(ErrorCode::degree_overflow, "total degree exceeds " + std::to_string(max_parse_degree) + " at position " +
                                             std::to_string(at) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    PrimeField field_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the polynomial grammar above into an expanded coefficient map over F_p.
inline FpPoly parse_bipoly(std::string_view text, Prime p) { return detail::PolyParser(text, p).parse(); }

}  // namespace sumprod

#endif  // SUMPROD_PARSE_HPP
