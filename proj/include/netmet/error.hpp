#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netmet {

// Raised when an enumeration or search would exceed its configured size guard.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::string what_budget, std::size_t budget)
      : std::runtime_error("budget exceeded: " + what_budget + " (budget " +
                           std::to_string(budget) + ")"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

private:
  std::size_t budget_;
};

// Malformed network document. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        detail_(msg) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace netmet
