#ifndef SPECHTGB_ERROR_HPP
#define SPECHTGB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spechtgb {

/// Syntax error in one of the text formats (partitions, filters,
/// polynomials, orders, fields). Positions are 1-based.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument(what + " at line " + std::to_string(line) + ", column " +
                              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised when an operation is asked to work over a field it cannot handle.
class UnsupportedField : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when Buchberger's algorithm exceeds its S-pair budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace spechtgb

#endif  // SPECHTGB_ERROR_HPP
