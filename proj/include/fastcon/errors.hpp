#pragma once

#include <stdexcept>

namespace fastcon {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; the message carries the offending line number.
struct ParseError : Error {
  using Error::Error;
};

// Operation requires a connected graph (lambda_2 above the connectivity
// threshold) and the supplied spectrum is not.
struct Disconnected : Error {
  using Error::Error;
};

// An iterative solver exhausted its sweep/iteration budget.
struct NonConvergence : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidOptions : Error {
  using Error::Error;
};

// Zero polynomial or similarly meaningless input.
struct DegenerateInput : Error {
  using Error::Error;
};

struct EmptyTrajectory : Error {
  using Error::Error;
};

}  // namespace fastcon
