#pragma once

#include <stdexcept>
#include <string>

namespace nctx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input probability outside [-eps_prob, 1 + eps_prob].
struct OutOfRangeProbability : Error {
  using Error::Error;
};

// Preparation/measurement counts do not match the requested mode.
struct WrongArity : Error {
  using Error::Error;
};

// Pivot weights left (eps, 1-eps): near-degenerate geometry that slipped past
// the hull checks.
struct NumericalDegeneracy : Error {
  using Error::Error;
};

// Auxiliary preparation's third coordinate is not strictly beyond all originals.
struct NotSeparated : Error {
  using Error::Error;
};

// Auxiliary shares a third coordinate with an original: the mixing segment is
// parallel to every candidate plane.
struct DegenerateDirection : Error {
  using Error::Error;
};

// LP pivot cap reached before termination.
struct SolverStall : Error {
  SolverStall(const std::string& msg, double best_residual)
      : Error(msg), residual(best_residual) {}
  double residual;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace nctx
