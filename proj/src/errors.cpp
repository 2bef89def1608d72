#include "equilef/errors.hpp"

namespace equilef {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::NonBijective: return "NonBijective";
    case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ClassifierMismatch: return "ClassifierMismatch";
    case ErrorKind::WrongRingKind: return "WrongRingKind";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::UnboundedOrbit: return "UnboundedOrbit";
    case ErrorKind::IncompatibleLevels: return "IncompatibleLevels";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::CrosscheckFailed: return "CrosscheckFailed";
    case ErrorKind::UnsupportedPi1: return "UnsupportedPi1";
    case ErrorKind::MissingPhiMap: return "MissingPhiMap";
    case ErrorKind::EquivalenceViolated: return "EquivalenceViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind), detail_(message) {}

}  // namespace equilef
