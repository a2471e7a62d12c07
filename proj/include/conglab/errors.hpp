#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conglab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t explored)
      : Error("budget exceeded: " + what + " (explored " + std::to_string(explored) + ")"), explored_(explored) {}
  std::size_t explored() const { return explored_; }

 private:
  std::size_t explored_;
};

// An internal invariant the construction relies on did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace conglab
