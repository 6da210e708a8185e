#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric3 {

enum class ErrorCode {
  NotPrimePower,
  UnsupportedOrder,
  DivisionByZero,
  ZeroArgument,
  InvalidParams,
  OutOfRange,
  DegenerateConfiguration,
  ExponentCollision,
  ZeroPolynomial,
  InvalidField,
  UnsupportedFamily,
  ShapeMismatch,
  TheoremWitnessMismatch,
  ParseError,
  NoFormulaForFamily,
  IOError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit-code mapping) can branch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric3
