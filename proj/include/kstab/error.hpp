#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

enum class ErrorCode {
  NotFullDimensional,
  DimensionCap,
  OriginNotInterior,
  OverflowGuard,
  ZeroDirection,
  NotFano,
  NotPrimitive,
  ZeroDivisor,
  EpsTooLarge,
  DegreeMismatch,
  GenerationExhausted,
  UnknownName,
  MalformedInput,
  InvalidArgument,
  OracleMismatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kstab
