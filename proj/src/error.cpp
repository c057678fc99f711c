#include "outfk/error.hpp"

namespace outfk {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ClosureExceedsBound: return "ClosureExceedsBound";
    case ErrorKind::NonIntegralOrbitCount: return "NonIntegralOrbitCount";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::SameOrbit: return "SameOrbit";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotSingleVertexOrbit: return "NotSingleVertexOrbit";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCohomology: return "UnknownCohomology";
    case ErrorKind::NoSuchEntry: return "NoSuchEntry";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::RegistryDataError: return "RegistryDataError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind), name_(error_name(kind)) {}

Error::Error(ErrorKind kind, std::string name, const std::string& message)
    : std::runtime_error(message), kind_(kind), name_(std::move(name)) {}

}  // namespace outfk
