#include "core/error.hpp"

namespace rootsplit {

const char* errorName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::InconsistentCertificate: return "InconsistentCertificate";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NonIntegerChern: return "NonIntegerChern";
    case ErrorCode::ProvenBoundViolated: return "ProvenBoundViolated";
    case ErrorCode::RootOutOfProvenRange: return "RootOutOfProvenRange";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::AmbiguousPart: return "AmbiguousPart";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace rootsplit
