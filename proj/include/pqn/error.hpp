#pragma once

#include <stdexcept>
#include <string>

namespace pqn {

/// Base class for all kernel errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing values that live on different charts (or of mismatched dimension).
struct ChartMismatchError : Error {
  explicit ChartMismatchError(const std::string& what) : Error(what) {}
};

/// Total degree of a result would exceed the configured cap.
struct DegreeCapError : Error {
  explicit DegreeCapError(const std::string& what) : Error(what) {}
};

/// Violated operation precondition (bad degree, non-closed form, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Syntax or validation error in user input, with 1-based position.
struct ParseError : Error {
  ParseError(const std::string& what, int line_, int column_)
      : Error(what + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

}  // namespace pqn
