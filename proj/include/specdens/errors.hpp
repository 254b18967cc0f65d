#pragma once

#include <stdexcept>
#include <string>

namespace specdens {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct DisconnectedGraph : Error {
  using Error::Error;
};

struct InvalidEdgeIndex : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

struct NotSquare : Error {
  using Error::Error;
};

// The combinatorially supplied kernel dimension disagrees with the computed
// spectrum: the first eigenvalue that should be positive is numerically zero.
struct KernelMismatch : Error {
  using Error::Error;
};

struct NoPositiveSpectrum : Error {
  using Error::Error;
};

struct NotATree : Error {
  using Error::Error;
};

struct NoEdges : Error {
  using Error::Error;
};

struct BudgetOutOfRange : Error {
  using Error::Error;
};

struct BadModuli : Error {
  using Error::Error;
};

struct NotNested : Error {
  using Error::Error;
};

struct VoltagesNotGenerating : Error {
  using Error::Error;
};

}  // namespace specdens
