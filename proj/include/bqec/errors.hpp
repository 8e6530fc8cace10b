#pragma once

#include <stdexcept>
#include <string>

namespace bqec {

/// Base of every error raised by the library. `code()` is the stable,
/// machine-readable tag the CLI reports.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Input outside an operation's mathematical domain (zero where nonzero is
/// required, singular curve, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// Operation called with inconsistent arguments (mismatched curves,
/// mixed variable contexts, divisor not dividing, ...).
class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error("usage", what) {}
};

/// A parameter value at which a parametric construction breaks down.
class DegenerateError : public Error {
public:
  explicit DegenerateError(const std::string& what) : Error("degenerate", what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

} // namespace bqec
