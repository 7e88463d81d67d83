#pragma once

#include <stdexcept>
#include <string>

namespace eucalc {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A file or JSON document could not be interpreted (bad syntax, unknown
/// keys, wrong value types).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structurally broken model or complex: dangling ids, cyclic closure
/// relation, entries stored outside their support.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A computing operation was asked to run on a model that fails validation.
class InvalidModelError : public Error {
 public:
  using Error::Error;
};

/// An intersection-number pairing was requested but the covector carries no
/// multiplicity datum for a stratum in the support. Absence is never
/// silently treated as zero.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace eucalc
