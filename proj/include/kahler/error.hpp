#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kahler {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands living over different fields or rings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Input text that does not match the grammar. Line and column are 1-based;
// line is 0 when the text was not read from a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string where = line ? std::to_string(line) + ":" + std::to_string(column)
                             : "column " + std::to_string(column);
    return where + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Gröbner step budget ran out. Never a wrong answer, always this error.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A dimension cap was hit before a construction could finish.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The ideal handed to the power-series model is not primary to the
// maximal ideal (the m-adic truncation never stabilized).
class NotPrimaryError : public Error {
 public:
  using Error::Error;
};

// A proposed algebra map sends some relation to a nonzero element.
class NotARingMap : public Error {
 public:
  using Error::Error;
};

}  // namespace kahler
