#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bistable {

// Base class for all library errors so callers can catch the whole family.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Operation needs a square matrix.
class not_square_error : public error {
 public:
  using error::error;
};

// Operation needs |A| == |B|.
class unbalanced_error : public error {
 public:
  using error::error;
};

// Operation needs a perfect matching (term rank equal to the order).
class no_perfect_matching_error : public error {
 public:
  using error::error;
};

// Instance exceeds a size guard of an exhaustive or exponential routine.
class too_large_error : public error {
 public:
  using error::error;
};

// Exact integer result does not fit the 64-bit result type.
class overflow_error : public error {
 public:
  using error::error;
};

// Operand shapes are incompatible (products, joins).
class dimension_mismatch_error : public error {
 public:
  using error::error;
};

// Fixture name not recognized by the generator registry.
class unknown_fixture_error : public error {
 public:
  using error::error;
};

// Malformed input file. Carries the 1-based position of the offending
// token, and prefixes the message with it.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bistable
