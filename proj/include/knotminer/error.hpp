#pragma once

#include <stdexcept>
#include <string>

namespace knotminer {

/// Base for every error raised by the library. The CLI maps subclasses onto
/// exit codes, so new failure kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Gauss code, JSON record, or catalog entry.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Pairing, SignMismatch, Record, Catalog };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A diagram has more crossings than the bracket state sum is allowed to expand.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside its documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic would have overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Vectors of different dimension were combined.
class LengthError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotminer
