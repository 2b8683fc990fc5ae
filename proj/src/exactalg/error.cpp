#include "pairloc/error.hpp"

namespace pairloc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::DegenerateFunctional: return "DegenerateFunctional";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::NotDegreeOne: return "NotDegreeOne";
    case ErrorKind::NonIsolatedFixedPoint: return "NonIsolatedFixedPoint";
    case ErrorKind::NonIsolatedFixedLocus: return "NonIsolatedFixedLocus";
    case ErrorKind::EngineUnavailable: return "EngineUnavailable";
    case ErrorKind::ZeroWeightPresent: return "ZeroWeightPresent";
    case ErrorKind::SpecializationMismatch: return "SpecializationMismatch";
    case ErrorKind::DegenerateSpecialization: return "DegenerateSpecialization";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::IncompleteVector: return "IncompleteVector";
    case ErrorKind::UnsupportedSpace: return "UnsupportedSpace";
    case ErrorKind::NoFit: return "NoFit";
    case ErrorKind::CacheError: return "CacheError";
  }
  return "Unknown";
}

}  // namespace pairloc
