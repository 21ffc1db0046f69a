#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlb {

/// Shape violation: arity mismatch, index out of range, foreign ring.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is well typed but not defined for this input (e.g. point
/// evaluation on a ring with nilpotents).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text-format error. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nlb

namespace nlb {

/// The request cannot be served with the given input (missing block, bad
/// selector, bound exceeded). Maps to exit status 2 in the CLI.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nlb
