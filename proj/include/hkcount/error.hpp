#pragma once

#include <stdexcept>
#include <string>

namespace hk {

enum class ErrorCode {
  InvalidArgument,
  OrderExceeded,
  NonUnitLeadingCoefficient,
  UnsupportedWeight,
  BracketValuationMismatch,
  RepresentativeOutOfRange,
  JacobiIndexViolation,
  NonIntegralCount,
  RankMismatch,
  SpaceMismatch,
  OddAdjunctionIntegral,
  InvariantViolation,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the library surfaces as an hk::Error carrying a code that
// the C API maps onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hk
