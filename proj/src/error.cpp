#include "rla/error.hpp"

namespace rla {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotARestrictedIdeal: return "NotARestrictedIdeal";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotATorus: return "NotATorus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace rla
