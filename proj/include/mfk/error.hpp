#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfk {

enum class ErrorCode {
  kExchangeViolation,
  kCardinalityMismatch,
  kParameterOutOfRange,
  kGroundSetTooLarge,
  kLoopsPresent,
  kDisconnected,
  kEmptyInterval,
  kDimensionMismatch,
  kNotAFace,
  kSingularSample,
  kInvalidBuildingSet,
  kNotLinearExtension,
  kNotAChain,
  kNotFlats,
  kUnknownName,
  kParseError,
  kUsage,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kExchangeViolation: return "ExchangeViolation";
    case ErrorCode::kCardinalityMismatch: return "CardinalityMismatch";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kLoopsPresent: return "LoopsPresent";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptyInterval: return "EmptyInterval";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotAFace: return "NotAFace";
    case ErrorCode::kSingularSample: return "SingularSample";
    case ErrorCode::kInvalidBuildingSet: return "InvalidBuildingSet";
    case ErrorCode::kNotLinearExtension: return "NotLinearExtension";
    case ErrorCode::kNotAChain: return "NotAChain";
    case ErrorCode::kNotFlats: return "NotFlats";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUsage: return "Usage";
  }
  return "Unknown";
}

/// Every module reports contract violations through this one exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mfk
