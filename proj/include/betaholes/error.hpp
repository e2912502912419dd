#pragma once

#include <stdexcept>
#include <string>

namespace bh {

enum class ErrorCode {
    LastDigitMismatch,
    PeriodicWord,
    LevelTooLarge,
    NotFarey,
    DegenerateFarey,
    OutOfRange,
    NotInQ,
    StateCapExceeded,
    TooLarge,
    NotMaximalRotation,
    NotFareyReflection,
    NotLyndon,
    UndecidableAtPrecision,
    AtlasInconclusive,
    FinitenessCertificateFailed,
    ParseError,
};

const char* error_name(ErrorCode c);

// Domain error carrying a machine-readable code. The CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& what)
        : std::runtime_error(std::string(error_name(c)) + ": " + what), code_(c) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bh
