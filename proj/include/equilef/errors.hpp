#pragma once

#include <stdexcept>
#include <string>

namespace equilef {

enum class ErrorKind {
    InvalidGroup,
    NonBijective,
    OrderBoundExceeded,
    InvalidRing,
    RingMismatch,
    ClassifierMismatch,
    WrongRingKind,
    InvalidTwist,
    UnboundedOrbit,
    IncompatibleLevels,
    ShapeMismatch,
    ValidationFailed,
    NonIntegralCoefficient,
    CrosscheckFailed,
    UnsupportedPi1,
    MissingPhiMap,
    EquivalenceViolated,
    ParseError,
    SchemaError,
    ArithmeticOverflow,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace equilef
