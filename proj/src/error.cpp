#include "percount/error.hpp"

namespace percount {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::NotAMorphism: return "NotAMorphism";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::NotAbelian: return "NotAbelian";
        case ErrorCode::MapDoesNotCommute: return "MapDoesNotCommute";
        case ErrorCode::ConstantTermNotZero: return "ConstantTermNotZero";
        case ErrorCode::ConstantTermZero: return "ConstantTermZero";
        case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
        case ErrorCode::Mismatch: return "Mismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace percount
