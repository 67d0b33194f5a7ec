#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cylwalk {

enum class ErrorKind {
  NotStrictlyIncreasing,
  OutOfRange,
  ParityViolation,
  BadDimensions,
  BadCylinder,
  NegativeLength,
  CapExceeded,
  NotCyclic,
  NonpositiveY,
  FormulaMismatch,
  DimensionMismatch,
  InvalidCount,
  QuadratureFailure,
  InexactDivision,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cylwalk
