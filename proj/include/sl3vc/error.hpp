#pragma once

#include <stdexcept>
#include <string>

namespace sl3vc {

enum class ErrorKind {
  FiniteOrder,       // matrix has finite order where infinite order is required
  NotSpecialLinear,  // determinant is not 1 (or not +-1 where that is allowed)
  NotUnipotent,      // (A - I)^3 != 0 where unipotency is required
  WrongClass,        // operation applied to an element of the wrong class
  BoundExhausted,    // a bounded search completed without finding what it needs
  InvalidInput,      // malformed data (shape, parse, relation violation, ...)
  SingularGenerator, // generator set contains a non-invertible matrix
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::FiniteOrder: return "FiniteOrder";
    case ErrorKind::NotSpecialLinear: return "NotSpecialLinear";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::WrongClass: return "WrongClass";
    case ErrorKind::BoundExhausted: return "BoundExhausted";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SingularGenerator: return "SingularGenerator";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace sl3vc
