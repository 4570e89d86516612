#include "atlas/error.hpp"

namespace atlas {

std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::FullSubset: return "FullSubset";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonzeroDefect: return "NonzeroDefect";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotLinearlyDependent: return "NotLinearlyDependent";
    case ErrorCode::NotBK: return "NotBK";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::NonnegativeDefect: return "NonnegativeDefect";
    case ErrorCode::NotUniqueCircuit: return "NotUniqueCircuit";
    case ErrorCode::NotEssentialDependent: return "NotEssentialDependent";
    case ErrorCode::RankTooHigh: return "RankTooHigh";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

} // namespace atlas
