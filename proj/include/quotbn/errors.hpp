#pragma once

#include <stdexcept>
#include <string>

namespace quotbn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad presentation data: duplicate or reserved generator names, invalid
/// truncation, malformed pairing sign.
struct PresentationError : Error {
  using Error::Error;
};

/// Elements of two different presentations were combined.
struct IncompatibleElements : Error {
  using Error::Error;
};

/// An operation received an argument outside its contract.
struct ArgumentError : Error {
  using Error::Error;
};

/// The ring truncation degree is too small for the requested extraction.
struct TruncationError : Error {
  using Error::Error;
};

/// Scenario parameters violate a validation rule (parity, genus range).
struct ParameterError : Error {
  using Error::Error;
};

/// Requested codimension 2g-s-1 is not positive.
struct CodimensionError : Error {
  using Error::Error;
};

/// Random sampling exhausted its resample budget.
struct SamplingError : Error {
  using Error::Error;
};

/// An internal invariant failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace quotbn
