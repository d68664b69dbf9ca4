#pragma once

#include <stdexcept>
#include <string>

namespace reskit {

enum class ErrorKind {
  InvalidArgument,
  InvalidConfiguration,
  NotFound,
  GenerationFailure,
  SingularEvaluation,
  OversamplingViolation,
  RankZero,
  IllConditionedGram,
  DegenerateTrialSpace,
  UnsupportedCertificate,
  LpFailure,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace reskit
