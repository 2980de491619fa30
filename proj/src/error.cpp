#include "gqc/error.hpp"

namespace gqc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NonSquareOrder: return "NonSquareOrder";
        case ErrorKind::ZeroTuple: return "ZeroTuple";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NonHomogeneous: return "NonHomogeneous";
        case ErrorKind::EmptyPointSet: return "EmptyPointSet";
        case ErrorKind::NotSelfOrthogonal: return "NotSelfOrthogonal";
        case ErrorKind::ContainmentViolated: return "ContainmentViolated";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DifferentialSquareNonzero: return "DifferentialSquareNonzero";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::EmptyFiltration: return "EmptyFiltration";
        case ErrorKind::InvalidStabilizer: return "InvalidStabilizer";
        case ErrorKind::NotSubcomplex: return "NotSubcomplex";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace gqc
