#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabset {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Vertex index outside the declared range.
class RangeError : public std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Structurally invalid graph data (self-loops, duplicate edges, count mismatch).
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Precondition violated by a caller-supplied argument.
class ArgumentError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Work refused because it exceeds a configured budget.
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unknown instance name.
class LookupError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Loaded data disagrees with the built-in instance manifest.
class IntegrityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stabset
