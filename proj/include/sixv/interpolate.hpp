#pragma once

#include <vector>

#include "sixv/cmatrix.hpp"

namespace sixv {

// n nodes radius*exp(i(2*pi*k/n + phase)); the small default phase keeps
// nodes off user-supplied real parameters
std::vector<Cx> circle_nodes(std::size_t n, double radius = 1.0,
                             double phase = 0.1);

// monomial coefficients (ascending degree, size n) of the unique polynomial
// of degree < n through (nodes[k], values[k]); built from the master
// polynomial by synthetic division, so no linear solve is involved
std::vector<Cx> lagrange_fit(const std::vector<Cx>& nodes,
                             const std::vector<Cx>& values);

// barycentric-style weights w[m] = 1/prod_{k!=m}(nodes[m]-nodes[k]);
// contracting values against them yields the top monomial coefficient
std::vector<Cx> leading_weights(const std::vector<Cx>& nodes);

// Horner evaluation, coefficients ascending
Cx polyval(const std::vector<Cx>& coeffs, Cx x);

struct Extrapolated {
  Cx value;
  double error_estimate = 0.0;
  bool diverged = false;
};

// Neville tableau extrapolation of samples f(eps[k]) to eps = 0;
// error_estimate is the last tableau correction, diverged is set when the
// corrections fail to shrink
Extrapolated neville_to_zero(const std::vector<double>& eps,
                             const std::vector<Cx>& values);

}  // namespace sixv
