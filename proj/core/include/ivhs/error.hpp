#pragma once

#include <stdexcept>
#include <string>

namespace ivhs {

/// Broad category of a failure; the CLI maps these to exit codes.
enum class ErrorKind {
  InvalidInput,         // malformed data, parse failures, out-of-range parameters
  HypothesisViolation,  // input is well formed but a theorem hypothesis fails
  Internal,             // an invariant of the library itself was broken
};

/// Exception type thrown by every module.  `code` is a short stable tag
/// (e.g. "NotCartier") that tests and the CLI match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_input(const std::string& code, const std::string& message) {
  throw Error(ErrorKind::InvalidInput, code, message);
}

[[noreturn]] inline void fail_hypothesis(const std::string& code, const std::string& message) {
  throw Error(ErrorKind::HypothesisViolation, code, message);
}

[[noreturn]] inline void fail_internal(const std::string& code, const std::string& message) {
  throw Error(ErrorKind::Internal, code, message);
}

}  // namespace ivhs
