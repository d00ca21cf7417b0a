#pragma once

#include <stdexcept>
#include <string>

namespace nilcone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatch, non-square input, out-of-range block size.
/// Malformed serialized input (bad JSON, wrong field types, unreadable file).
class InputError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A singular matrix where an invertible one is required.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The input violates a documented precondition (index range, sum-freeness, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The nilpotent matrix is not generic for the requested group.
class GenericityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A matrix violates the cell pattern of a normal form.
class PatternError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Point outside the semistable locus of a projective quotient map.
class UnstablePointError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotToricError : public Error {
 public:
  using Error::Error;
};

class NotAcceptableError : public Error {
 public:
  using Error::Error;
};

/// Computation refused because the input exceeds desk scale.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// No invertible conjugating element was found.
///
/// `certified()` is true when the exhaustive grid check proved that the
/// solution space contains no invertible element at all.
class NotConjugateError : public Error {
 public:
  NotConjugateError(const std::string& what, bool certified)
      : Error(what), certified_(certified) {}
  bool certified() const noexcept { return certified_; }

 private:
  bool certified_;
};

/// A postcondition the library guarantees failed to hold. Never expected.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilcone
