#pragma once

#include <stdexcept>
#include <string>

namespace hjc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or parameter lies outside the space (negative half-line
/// coordinate, lattice point off the grid graph, p <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Geodesic branch or candidate enumeration could not be carried out.
class EnumerationError : public Error {
 public:
  using Error::Error;
};

/// A numeric Legendre transform needed momenta beyond its p-grid.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// The Lagrangian grows too slowly to bound the propagation speed.
class UnboundedSpeedError : public Error {
 public:
  using Error::Error;
};

/// A field was queried at a point it cannot resolve.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Every candidate of a Hopf-Lax minimization had infinite cost.
class NoFiniteCandidateError : public Error {
 public:
  using Error::Error;
};

/// Lipschitz data missing where a propagation speed is required.
class MissingLipschitzError : public Error {
 public:
  using Error::Error;
};

}  // namespace hjc
