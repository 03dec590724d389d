#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqprod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A limit (table cap, edge budget, node budget, enumeration range) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class FetchError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqprod
