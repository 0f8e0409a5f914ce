#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kend {

enum class ErrorCode {
  kInvalidArgument,
  kEdgeNotPresent,
  kNotConnected,
  kTooSmall,
  kHypothesisViolated,
  kInternalContradiction,
  kConditionViolated,
  kNoValidAttachment,
  kMalformedHeader,
  kBadByteRange,
  kTruncatedBody,
  kTrailingGarbage,
  kUnknownName,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kend
