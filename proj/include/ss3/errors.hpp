#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ss3 {

enum class Errc {
    DegreeOutOfRange,
    ModulusReducible,
    FactorizationFailure,
    DivisionByZero,
    ContextMismatch,
    ZeroArgument,
    ParseError,
    SingularCurve,
    PointNotOnCurve,
    OracleTooLarge,
    InvalidCurve,
    NotANonSquare,
    DParityError,
    NotSupersingular,
};

constexpr std::string_view errc_name(Errc c) noexcept
{
    switch (c) {
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::ModulusReducible: return "ModulusReducible";
    case Errc::FactorizationFailure: return "FactorizationFailure";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::InvalidCurve: return "InvalidCurve";
    case Errc::NotANonSquare: return "NotANonSquare";
    case Errc::DParityError: return "DParityError";
    case Errc::NotSupersingular: return "NotSupersingular";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace ss3
