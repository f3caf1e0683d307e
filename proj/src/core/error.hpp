#pragma once

#include <stdexcept>
#include <string>

namespace rankmetric {

enum class ErrorKind {
  input,     // malformed arguments or files
  domain,    // parameters outside a formula's validity range
  mismatch,  // field or shape mismatch between operands
  budget,    // enumeration larger than the configured budget
  internal,  // an invariant that should be impossible to break
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure in a code file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::input, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rankmetric
