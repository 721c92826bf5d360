#pragma once

#include <stdexcept>
#include <string>

namespace isoperilab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input points do not span a proper convex polygon (hull < 3 vertices).
struct DegenerateInput : Error {
  using Error::Error;
};

/// A parameter is outside its documented domain.
struct BadParameter : Error {
  using Error::Error;
};

/// An iterative solver hit its evaluation cap before the step tolerance.
struct NoConvergence : Error {
  using Error::Error;
};

/// A point handed to a boundary-only operation is not on the boundary.
struct NotOnBoundary : Error {
  using Error::Error;
};

/// Rejection sampling exhausted its attempt budget.
struct GenerationFailed : Error {
  using Error::Error;
};

/// A corpus filter left nothing to aggregate.
struct EmptyCohort : Error {
  using Error::Error;
};

/// No starting shape passed the feasibility check.
struct NoFeasibleSeed : Error {
  using Error::Error;
};

}  // namespace isoperilab
