#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

enum class ErrorCode {
    EmptySupport,
    EmptySubset,
    FullSubset,
    ArityMismatch,
    NonzeroDefect,
    TooLarge,
    NotLinearlyDependent,
    NotBK,
    Underdetermined,
    NonnegativeDefect,
    NotUniqueCircuit,
    NotEssentialDependent,
    RankTooHigh,
    ParseError,
    InvariantViolation,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library. InvariantViolation signals a bug or a
/// broken structural claim; the remaining codes are user-facing input errors.
class AtlasError : public std::runtime_error {
public:
    AtlasError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw AtlasError(code, message); }

inline void check_invariant(bool ok, const std::string& message)
{
    if (!ok) fail(ErrorCode::InvariantViolation, message);
}

} // namespace atlas
