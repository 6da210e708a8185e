#include "toric3/error.hpp"

namespace toric3 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::ExponentCollision: return "ExponentCollision";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::TheoremWitnessMismatch: return "TheoremWitnessMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoFormulaForFamily: return "NoFormulaForFamily";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace toric3
