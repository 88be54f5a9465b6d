#ifndef SUMPROD_ERROR_HPP
#define SUMPROD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumprod {

enum class ErrorCode {
    invalid_argument,
    composite_input,
    zero_inverse,
    budget_exceeded,
    syntax_error,
    degree_overflow,
    zero_polynomial,
    constant_polynomial,
    degree_vs_characteristic,
    not_homogeneous,
    zero_shift,
    zero_value,
    size_budget,
    length_mismatch,
    coset_collision,
    zero_level,
    not_required,
    duplicate_y,
    config_error,
    io_error,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::composite_input: return "CompositeInput";
        case ErrorCode::zero_inverse: return "ZeroInverse";
        case ErrorCode::budget_exceeded: return "BudgetExceeded";
        case ErrorCode::syntax_error: return "SyntaxError";
        case ErrorCode::degree_overflow: return "DegreeOverflow";
        case ErrorCode::zero_polynomial: return "ZeroPolynomial";
        case ErrorCode::constant_polynomial: return "ConstantPolynomial";
        case ErrorCode::degree_vs_characteristic: return "DegreeVsCharacteristic";
        case ErrorCode::not_homogeneous: return "NotHomogeneous";
        case ErrorCode::zero_shift: return "ZeroShift";
        case ErrorCode::zero_value: return "ZeroValue";
        case ErrorCode::size_budget: return "SizeBudget";
        case ErrorCode::length_mismatch: return "LengthMismatch";
        case ErrorCode::coset_collision: return "CosetCollision";
        case ErrorCode::zero_level: return "ZeroLevel";
        case ErrorCode::not_required: return "NotRequired";
        case ErrorCode::duplicate_y: return "DuplicateY";
        case ErrorCode::config_error: return "ConfigError";
        case ErrorCode::io_error: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the report writer) can classify it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace sumprod

#endif  // SUMPROD_ERROR_HPP
