#pragma once

#include <stdexcept>
#include <string>

namespace fourierlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

/// A value left the ring Q[pi] (e.g. a division by pi that does not divide).
class NotInPiRing : public Error {
 public:
  using Error::Error;
};

/// A series term has no closed form in Q[pi] (parity rule violated).
class NotClosedForm : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DependentLattice : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

class UnderdeterminedSegment : public Error {
 public:
  using Error::Error;
};

class UnrecognizedCoefficient : public Error {
 public:
  UnrecognizedCoefficient(const std::string& what, double value)
      : Error(what), value_(value) {}
  double value() const { return value_; }

 private:
  double value_;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

/// Expression-language syntax error with the byte offset where it occurred.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::string expected)
      : Error(message + " at position " + std::to_string(position) +
              (expected.empty() ? std::string{} : " (expected " + expected + ")")),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace fourierlab
