#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphburn {

// Malformed input text. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedFormat : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Query about a vertex that does not occur in a burning sequence.
class NotInSequence : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The exact search hit one of its limits; the answer is unknown, not wrong.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphburn
