#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by an exactly-zero value. Search code treats this as "prune".
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class MixedDomain : public Error {
 public:
  MixedDomain() : Error("operands belong to different value domains") {}
};

class VanishingDenominator : public Error {
 public:
  VanishingDenominator() : Error("denominator vanishes at the evaluation point") {}
};

class MissingVariable : public Error {
 public:
  explicit MissingVariable(const std::string& name)
      : Error("no value assigned to variable '" + name + "'") {}
};

/// Malformed value literal or expression; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class EmptyInstance : public InvalidInstance {
 public:
  EmptyInstance() : InvalidInstance("instance has no values") {}
};

class LeafCountMismatch : public InvalidInstance {
 public:
  LeafCountMismatch(std::size_t leaves, std::size_t values)
      : InvalidInstance("shape has " + std::to_string(leaves) + " leaves but instance has " +
                        std::to_string(values) + " values") {}
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

/// The product of the source values is not a perfect square, so the
/// construction's target cannot be written down. Such sources are NO instances.
class NonSquareProduct : public Error {
 public:
  using Error::Error;
};

class InvalidSourceWitness : public Error {
 public:
  using Error::Error;
};

/// An expression reaches the target but is not in the normal form the
/// backward witness map expects.
class WitnessShapeUnexpected : public Error {
 public:
  using Error::Error;
};

}  // namespace aec
