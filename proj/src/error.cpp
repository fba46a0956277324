#include "kstab/error.hpp"

namespace kstab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::OverflowGuard: return "OverflowGuard";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::NotFano: return "NotFano";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::EpsTooLarge: return "EpsTooLarge";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

}  // namespace kstab
