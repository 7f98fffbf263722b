#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacsyz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's documented range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A prime that cannot represent the input faithfully (divides a denominator,
/// collapses two lines, changes an intersection lattice).
class BadPrime : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The computed resolution data violates a structural identity.
class StructureError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for free curves (e.g. the Bourbaki scheme).
class FreeCurve : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

}  // namespace jacsyz
