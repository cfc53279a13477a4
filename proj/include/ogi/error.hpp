#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the source name and 1-based line number
/// (0 when the error is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(format(source, line, what)), source_(std::move(source)), line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& what) {
    std::string out = source.empty() ? std::string("<input>") : source;
    if (line != 0) out += ":" + std::to_string(line);
    return out + ": " + what;
  }

  std::string source_;
  std::size_t line_;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("alphabet mismatch between operands") {}
  explicit AlphabetMismatch(const std::string& detail)
      : Error("alphabet mismatch: " + detail) {}
};

/// A configured resource cap (string count, state count) was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Arguments violating an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NondeterministicInput : public Error {
 public:
  using Error::Error;
};

}  // namespace ogi
