#pragma once

#include <stdexcept>
#include <string>

namespace funtopo {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a text file that does not parse, or a complex, cover or
/// sample set that breaks its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but falls outside the hypotheses of a theorem the
/// caller asked to apply.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised by a text reader; carries the 1-based line number.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive routine refused an input beyond its size limit.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace funtopo
