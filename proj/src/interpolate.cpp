#include "sixv/interpolate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sixv/errors.hpp"

namespace sixv {

std::vector<Cx> circle_nodes(std::size_t n, double radius, double phase) {
  if (n == 0) throw InterpolationError("node count must be positive");
  if (radius <= 0.0) throw InterpolationError("node radius must be positive");
  std::vector<Cx> nodes(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) +
        phase;
    nodes[k] = radius * Cx(std::cos(angle), std::sin(angle));
  }
  return nodes;
}

namespace {

void require_distinct(const std::vector<Cx>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (std::abs(nodes[i] - nodes[j]) < 1e-12) {
        throw InterpolationError("coincident interpolation nodes at indices " +
                                 std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
}

}  // namespace

std::vector<Cx> lagrange_fit(const std::vector<Cx>& nodes,
                             const std::vector<Cx>& values) {
  const std::size_t n = nodes.size();
  if (n == 0) throw InterpolationError("empty node set");
  if (values.size() != n) {
    throw InterpolationError("node/value count mismatch: " +
                             std::to_string(n) + " vs " +
                             std::to_string(values.size()));
  }
  require_distinct(nodes);

  // master = prod_k (x - nodes[k]), ascending, degree n
  std::vector<Cx> master(n + 1, Cx(0.0, 0.0));
  master[0] = Cx(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t d = k + 1; d-- > 0;) {
      master[d + 1] += master[d];
      master[d] *= -nodes[k];
    }
  }

  std::vector<Cx> coeffs(n, Cx(0.0, 0.0));
  std::vector<Cx> quotient(n);
  for (std::size_t m = 0; m < n; ++m) {
    // synthetic division of master by (x - nodes[m])
    Cx carry = master[n];
    for (std::size_t d = n; d-- > 0;) {
      quotient[d] = carry;
      carry = master[d] + nodes[m] * carry;
    }
    Cx denom(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != m) denom *= nodes[m] - nodes[k];
    }
    const Cx scale = values[m] / denom;
    for (std::size_t d = 0; d < n; ++d) coeffs[d] += scale * quotient[d];
  }
  return coeffs;
}

std::vector<Cx> leading_weights(const std::vector<Cx>& nodes) {
  require_distinct(nodes);
  std::vector<Cx> weights(nodes.size());
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    Cx denom(1.0, 0.0);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k != m) denom *= nodes[m] - nodes[k];
    }
    weights[m] = Cx(1.0, 0.0) / denom;
  }
  return weights;
}

Cx polyval(const std::vector<Cx>& coeffs, Cx x) {
  Cx acc(0.0, 0.0);
  for (std::size_t d = coeffs.size(); d-- > 0;) acc = acc * x + coeffs[d];
  return acc;
}

Extrapolated neville_to_zero(const std::vector<double>& eps,
                             const std::vector<Cx>& values) {
  const std::size_t n = eps.size();
  if (n < 3) throw InterpolationError("extrapolation needs >= 3 samples");
  if (values.size() != n) {
    throw InterpolationError("eps/value count mismatch in extrapolation");
  }

  std::vector<Cx> column(values);
  std::vector<double> corrections;
  for (std::size_t level = 1; level < n; ++level) {
    const Cx previous_best = column[0];
    for (std::size_t i = 0; i + level < n; ++i) {
      const double xi = eps[i], xj = eps[i + level];
      if (std::abs(xi - xj) < 1e-15) {
        throw InterpolationError("coincident eps values in extrapolation");
      }
      // value at eps=0 of the interpolant through samples i..i+level
      column[i] = (xi * column[i + 1] - xj * column[i]) / (xi - xj);
    }
    corrections.push_back(std::abs(column[0] - previous_best));
  }

  Extrapolated out;
  out.value = column[0];
  out.error_estimate = corrections.back();
  for (std::size_t k = 1; k < corrections.size(); ++k) {
    // corrections should shrink as the tableau deepens; ignore wiggle at the
    // rounding floor
    if (corrections[k] > corrections[k - 1] && corrections[k] > 1e-13) {
      out.diverged = true;
    }
  }
  return out;
}

}  // namespace sixv
