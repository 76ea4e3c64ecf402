#pragma once

#include <stdexcept>
#include <string>

namespace opi {

/// Base class of all exceptions thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible matrix/block dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be (numerically) symmetric is not.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be PSD within tolerance is not.
class NotPsdError : public Error {
 public:
  using Error::Error;
};

/// Gram mismatch: no isometry maps one block to the other.
class NoIsometryError : public Error {
 public:
  using Error::Error;
};

/// A certificate could not be produced at the requested tolerance.
class NoCertificateError : public Error {
 public:
  using Error::Error;
};

/// Invalid operator class description (kind/shape/spectrum mismatch).
class InvalidClassError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (matrix files, spectrum grammar, config).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Conic backend missing, misconfigured, or failed internally.
class BackendError : public Error {
 public:
  using Error::Error;
};

}  // namespace opi
