#pragma once

#include <stdexcept>
#include <string>

namespace eskel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot be interpreted: bad literals, ragged matrices, dimension mismatches.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold (e.g. ray origin outside P).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The generic cutting-plane ray shooter hit its iteration cap.
class UnresolvedRay : public Error {
 public:
  using Error::Error;
};

/// Resultant edge directions were requested for a non-generic configuration.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold by construction was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace eskel
