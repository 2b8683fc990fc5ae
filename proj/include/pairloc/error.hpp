#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pairloc {

enum class ErrorKind {
  InvalidArgument,
  NotPolynomial,
  DegenerateFunctional,
  ParseError,
  ValidationError,
  ZeroClass,
  NotDegreeOne,
  NonIsolatedFixedPoint,
  NonIsolatedFixedLocus,
  EngineUnavailable,
  ZeroWeightPresent,
  SpecializationMismatch,
  DegenerateSpecialization,
  SingularMatrix,
  IncompleteVector,
  UnsupportedSpace,
  NoFit,
  CacheError,
};

std::string_view to_string(ErrorKind kind);

/// Every module reports failures through this one exception type; the kind is
/// what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace pairloc
