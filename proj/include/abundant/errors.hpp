#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abundant {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrimeFactor : public Error {
 public:
  using Error::Error;
};
class DuplicatePrime : public Error {
 public:
  using Error::Error;
};
class ZeroExponent : public Error {
 public:
  using Error::Error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class NotDivisible : public Error {
 public:
  using Error::Error;
};
class TooLarge : public Error {
 public:
  using Error::Error;
};
class OutOfRange : public Error {
 public:
  using Error::Error;
};
class RangeNotCovered : public Error {
 public:
  using Error::Error;
};
class HorizonInsufficient : public Error {
 public:
  using Error::Error;
};
class HorizonMismatch : public Error {
 public:
  using Error::Error;
};
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Interval comparison still ambiguous at the precision cap.
class PrecisionExhausted : public Error {
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

}  // namespace abundant
