#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpd {

/// Every domain failure the library can report. The CLI prints the name of
/// the code on the diagnostic stream, so the spelling is part of the
/// user-facing surface.
enum class ErrorCode {
    NotCoprime,
    ZeroPolynomial,
    DivisionByZero,
    ParseError,
    IrrationalLocus,
    PositiveSum,
    FractionalPlusSpread,
    NegativeDegreeParabolic,
    UnsupportedSpec,
    NonRationalRoots,
    GcdViolation,
    NotUnitary,
    ConstantPolynomial,
    InadmissibleDegree,
    NotInRing,
    CapExceeded,
    NoPositiveLnd,
    NotSmallGroup,
    UnknownName,
    BadParams,
    BadSpecFile,
    Overflow,
    OracleMismatch,
    GoldenMismatch,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace dpd
