#pragma once

#include <stdexcept>
#include <string>

namespace zetacode {

// Two failure classes with distinct process exit codes:
//   Validation (2): bad or inconsistent input — the caller's problem.
//   Internal   (3): a library invariant broke — always a bug here.
enum class ErrorKind { Validation, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message),
        kind_(kind),
        code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_validation(const std::string& code,
                                         const std::string& message) {
  throw Error(ErrorKind::Validation, code, message);
}

[[noreturn]] inline void fail_internal(const std::string& code,
                                       const std::string& message) {
  throw Error(ErrorKind::Internal, code, message);
}

}  // namespace zetacode
