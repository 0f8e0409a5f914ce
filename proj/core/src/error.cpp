#include "kend/error.hpp"

namespace kend {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
    case ErrorCode::kConditionViolated: return "ConditionViolated";
    case ErrorCode::kNoValidAttachment: return "NoValidAttachment";
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kBadByteRange: return "BadByteRange";
    case ErrorCode::kTruncatedBody: return "TruncatedBody";
    case ErrorCode::kTrailingGarbage: return "TrailingGarbage";
    case ErrorCode::kUnknownName: return "UnknownName";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace kend
