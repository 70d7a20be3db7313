#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stablesketch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a precondition (bad parameter, negative weight, empty vector...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Sketches or encodings produced under different configurations were compared.
class ConfigMismatchError : public Error {
 public:
  using Error::Error;
};

/// A collision law was requested for an alpha with no known closed form.
class NoClosedFormError : public Error {
 public:
  using Error::Error;
};

/// Malformed dataset text. `line()` is 1-based.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stablesketch
