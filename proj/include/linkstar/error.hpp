#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkstar {

enum class ErrorCode {
  DegeneratePair,
  DegenerateSegment,
  EmptyInput,
  PointNotOnComplex,
  KTooSmall,
  RetryLimitExceeded,
  NotConvex,
  GammaPlacementFailed,
  IndexOutOfRange,
  TupleNotOnComplex,
  WrongArity,
  VerificationFailed,
  SameSideInput,
  DegenerateK,
  InvariantViolation,
  PointNotInT,
  PreconditionViolated,
  MalformedDocument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (CLI, bindings, tests) can dispatch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linkstar
