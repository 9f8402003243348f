#pragma once

#include <stdexcept>
#include <string>

namespace zipfaudit {

/// Base class for every error this library raises.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (bad count token, broken CSV/JSON).
struct ParseError : Error {
  using Error::Error;
};

/// Structurally valid input that violates a data contract
/// (duplicate names, missing columns, negative counts).
struct ValidationError : Error {
  using Error::Error;
};

/// Value outside the mathematical domain of an operation
/// (non-positive value in a log fit, zero followers in a ratio).
struct DomainError : Error {
  using Error::Error;
};

/// Too few points/records for the requested computation.
struct InsufficientDataError : Error {
  using Error::Error;
};

/// Invalid generator or sampler parameters.
struct ParameterError : Error {
  using Error::Error;
};

/// Rank index outside a model's valid range.
struct RangeError : Error {
  using Error::Error;
};

/// Operation requires a connected graph.
struct ConnectivityError : Error {
  using Error::Error;
};

}  // namespace zipfaudit
