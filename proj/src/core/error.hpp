#pragma once

#include <stdexcept>
#include <string>

namespace rootsplit {

enum class ErrorCode {
  SingularMatrix = 1,
  IllConditioned,
  DimensionError,
  InconsistentCertificate,
  RelationViolated,
  NonIntegerChern,
  ProvenBoundViolated,
  RootOutOfProvenRange,
  EmptyIntersection,
  AmbiguousPart,
  SchemaError,
  InvalidArgument,
  Internal,
};

const char* errorName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rootsplit
