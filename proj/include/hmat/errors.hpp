#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmat {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two vectors (or matrix rows) of unequal length were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument is outside the operation's domain (odd order, k out of
// range, composite where a prime is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A square matrix was required but a rectangular one was supplied.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a documented capacity limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed HMAT text. Carries the 1-based line number of the offence.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hmat
