#pragma once

#include <stdexcept>
#include <string>

namespace pmvw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two operands live in different carriers (or one is malformed for its carrier).
struct CarrierMismatchError : Error {
  using Error::Error;
};

/// An HValue was used with an HSpec of the other variant.
struct SpecMismatchError : Error {
  using Error::Error;
};

/// A required order relation (a <= b, 0 <= x <= u) does not hold.
struct OrderError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// A verified structural law failed at runtime; carries the offending operands.
struct StructureDefect : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Requested an analytic construction on a carrier that has none.
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace pmvw
