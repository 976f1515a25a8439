#pragma once

#include <stdexcept>
#include <string>

namespace sixv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// shape mismatch in linear algebra or parameter vectors
struct DimensionError : Error {
  using Error::Error;
};

// an evaluation landed within delta_sing of a singular manifold;
// carries the manifold name so callers can redraw or report precisely
struct SingularManifoldError : Error {
  std::string manifold;
  double magnitude;
  SingularManifoldError(std::string manifold_, double magnitude_)
      : Error("singular manifold " + manifold_ + " approached, |value| = " +
              std::to_string(magnitude_)),
        manifold(std::move(manifold_)),
        magnitude(magnitude_) {}
};

// coincident interpolation nodes, empty data, inconsistent grid shapes
struct InterpolationError : Error {
  using Error::Error;
};

// size guard tripped (system dimension, node count, sample budget)
struct BudgetError : Error {
  using Error::Error;
};

// malformed input file or CLI parameter
struct ParseError : Error {
  using Error::Error;
};

}  // namespace sixv
