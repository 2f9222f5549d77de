#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace percount {

enum class ErrorCode {
    NotPrime,
    FieldTooLarge,
    DivisionByZero,
    NotADivisor,
    NotAMorphism,
    NotClosed,
    GroupTooLarge,
    NotAbelian,
    MapDoesNotCommute,
    ConstantTermNotZero,
    ConstantTermZero,
    ConstantTermNotOne,
    Mismatch,
    ParseError,
    InvalidArgument,
    InvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the CLI
// maps them to exit statuses and machine-readable JSON errors.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace percount
