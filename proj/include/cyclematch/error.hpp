#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclematch {

// Bad input from the caller: malformed files, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class EmptyInputError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidSimplexError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidFieldError : public InputError {
 public:
  using InputError::InputError;
};

class NotNestedError : public InputError {
 public:
  using InputError::InputError;
};

class ReindexError : public InputError {
 public:
  using InputError::InputError;
};

class CompatibilityError : public InputError {
 public:
  using InputError::InputError;
};

class OracleScaleError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                   ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclematch
