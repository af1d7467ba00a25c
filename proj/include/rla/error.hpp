#pragma once

#include <stdexcept>
#include <string>

namespace rla {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  AmbientMismatch,
  ResourceLimit,
  AlgebraMismatch,
  NotARestrictedIdeal,
  NotASubalgebra,
  NotATorus,
  DivisionByZero,
  NotMonic,
  BadParameters,
  NotSolvable,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rla
