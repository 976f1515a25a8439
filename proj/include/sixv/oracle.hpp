#pragma once

#include <vector>

#include "sixv/cmatrix.hpp"
#include "sixv/model.hpp"

namespace sixv {

// <dual_vacuum| prod_i b_operator(lambda_i) |vacuum>; no denominators, so no
// error paths beyond parameter validation
Cx partition_function(const ModelParams& params, const SpectralPoint& point);

// vacuum eigenvalues of the double-row blocks; divides by a(2 lambda)
struct VacuumEigenvalues {
  Cx a_on_vacuum;       // eigenvalue of the a block on the vacuum
  Cx dtilde_on_vacuum;  // eigenvalue of the shifted d block on the vacuum
  Cx a_on_dual;         // eigenvalue of the a block on the dual vacuum
};
VacuumEigenvalues eigenvalue_functions(const ModelParams& params, Cx lambda);

// [n]_{q2} factorial computed with plain sums, no divisions
Cx q_factorial(std::size_t n, Cx q2);

// closed form for the top coefficient of the rescaled partition function
Cx asymptotic_coefficient(const ModelParams& params);

// partition function times exp(2 L sum(lambda)); a polynomial of degree 2L
// in each variable x_i = exp(2 lambda_i)
Cx zbar_value(const ModelParams& params, const SpectralPoint& point);

// rescaled partition function evaluated on a tensor grid; the creation
// operators are built once per node and reused across the grid
class ZbarGrid {
 public:
  ZbarGrid(const ModelParams& params, const std::vector<Cx>& nodes,
           unsigned threads = 1);

  const std::vector<Cx>& nodes() const { return nodes_; }
  std::size_t size() const { return values_.size(); }

  // flat index decodes base nodes().size(), axis 0 most significant
  const std::vector<Cx>& values() const { return values_; }

 private:
  std::vector<Cx> nodes_;
  std::vector<Cx> values_;
};

// top coefficient (degree 2L in every variable simultaneously) of the
// rescaled partition function, via grid contraction with leading weights
Cx zbar_leading_coefficient(const ModelParams& params, double node_radius = 1.0,
                            unsigned threads = 1);

// coefficients of the rescaled partition function as a polynomial in the
// single variable x_axis, the other arguments held at `point`; node count is
// caller-chosen so degree bounds can be probed with head room
std::vector<Cx> zbar_axis_coefficients(const ModelParams& params,
                                       const SpectralPoint& point,
                                       std::size_t axis, std::size_t nnodes,
                                       double node_radius = 1.0);

// relative change of the partition function under exchanging two arguments
double symmetry_residual(const ModelParams& params, const SpectralPoint& point,
                         std::size_t i, std::size_t j);

}  // namespace sixv
