#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soficlab {

// Base of every error thrown by the library. The CLI maps these onto exit
// codes; callers that only care about "something went wrong" catch Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A brute-force routine was asked to work beyond its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace soficlab
