#pragma once

#include <stdexcept>
#include <string>

namespace ordsolid {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or brute-force check would exceed a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Weight, diagram, or cocone shapes do not line up.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed structure handed to a constructor (non-transitive relation,
/// non-monotone map, table disagreeing with the order, ...).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// Text input violates a serialization schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordsolid
