#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace outfk {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  ModulusMismatch,
  SingularMatrix,
  ClosureExceedsBound,
  NonIntegralOrbitCount,
  NonIntegral,
  NotAForest,
  SameOrbit,
  NotComposable,
  NotSingleVertexOrbit,
  InvalidGraph,
  ParseError,
  UnknownCohomology,
  NoSuchEntry,
  OutOfRange,
  RegistryDataError,
};

std::string_view error_name(ErrorKind kind);

// All library failures are reported with this exception. name() is the
// stable identifier the CLI prints; for graph validation failures it is the
// name of the violated invariant (e.g. "FreenessViolation").
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, std::string name, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

}  // namespace outfk
