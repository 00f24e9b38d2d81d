#pragma once

#include <stdexcept>
#include <string>

namespace solang {

// Shape / arity problems with matrix or vector arguments.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Square system with vanishing determinant.
struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

// Input does not span the expected affine dimension.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Query point lies outside the polytope.
struct ContainmentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Linearly dependent generators where independence is required.
struct DegeneracyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Cone contains a line where a pointed cone is required.
struct LinealityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Desk-scale guard tripped (dimension, dilation, or period too large).
struct SizeGuardError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Underdetermined interpolation system.
struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact cross-check failed; indicates an enumeration bug, not user error.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fit residual exceeded the propagated engine error bound.
struct EngineAccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series terms stopped decreasing; caller should fall back to Monte Carlo.
struct SeriesDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid family parameters or malformed input.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace solang
