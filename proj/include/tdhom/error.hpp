#pragma once

#include <stdexcept>
#include <string>

namespace tdhom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Dimension, arity or space mismatch between composed objects.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// Malformed structure-file text or malformed structure data.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An input structure violates one of its defining identities.
class AxiomFailure : public Error {
 public:
  using Error::Error;
};

/// A check was asked of an input that does not meet its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Refusal to materialize something larger than the configured limits.
class GuardRefusal : public Error {
 public:
  using Error::Error;
};

/// A computed identity that must hold unconditionally did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdhom
