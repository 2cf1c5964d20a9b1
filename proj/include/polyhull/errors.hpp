#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyhull {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/** A rational function was evaluated at a zero of its denominator. */
class PoleError : public Error {
 public:
  using Error::Error;
};

/** Evaluation would need roots that are not rational. */
class UnsupportedEvaluation : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/** Raised by operations that require a bounded polyhedron. */
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/** An enumeration produced more points than the configured cap. */
class PointLimitExceeded : public Error {
 public:
  explicit PointLimitExceeded(std::size_t limit)
      : Error("lattice point limit of " + std::to_string(limit) + " exceeded"), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace polyhull
