#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cornerk {

/// Error taxonomy used to select the process exit code in the CLI:
/// `domain` for violated preconditions and failed mathematical contracts,
/// `parse` for malformed input (flags, builtin spec strings, JSON files).
enum class ErrorKind { domain, parse };

/// Exception carrying a stable machine-readable code of the form
/// "<module>.<operation>". The CLI renders every failure as a single
/// stderr line "ERROR[<code>]: <message>".
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message, ErrorKind kind = ErrorKind::domain)
      : std::runtime_error(message), code_(std::move(code)), kind_(kind) {}

  [[nodiscard]] const std::string& code() const noexcept { return code_; }
  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  std::string code_;
  ErrorKind kind_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message,
                              ErrorKind kind = ErrorKind::domain) {
  throw Error(std::move(code), message, kind);
}

} // namespace cornerk
