#include "sixv/oracle.hpp"

#include <cmath>

#include "sixv/algebra.hpp"
#include "sixv/errors.hpp"
#include "sixv/interpolate.hpp"
#include "sixv/parallel.hpp"

namespace sixv {

Cx partition_function(const ModelParams& params, const SpectralPoint& point) {
  validate_point(params, point);
  CVector v = vacuum(params.L);
  for (std::size_t i = point.lambda.size(); i-- > 0;) {
    v = b_operator(params, point.lambda[i]) * v;
  }
  return v.back();  // bilinear pairing with the dual vacuum
}

VacuumEigenvalues eigenvalue_functions(const ModelParams& params, Cx lambda) {
  params.validate();
  const Cx g = params.gamma, h = params.h;
  const Cx a2 = guarded(weight_a(2.0 * lambda, g), "a(2 lambda)");
  Cx prod_aa(1.0, 0.0), prod_bb(1.0, 0.0);
  for (const Cx m : params.mu) {
    prod_aa *= weight_a(lambda - m, g) * weight_a(lambda + m, g);
    prod_bb *= weight_b(lambda - m) * weight_b(lambda + m);
  }

  VacuumEigenvalues out;
  out.a_on_vacuum = weight_b(h + lambda) * prod_aa;
  out.dtilde_on_vacuum =
      -(weight_b(2.0 * lambda) / a2) * weight_a(lambda - h, g) * prod_bb;
  out.a_on_dual = (weight_c(g) / a2) * weight_b(h - lambda) * prod_aa +
                  (weight_b(2.0 * lambda) / a2) * weight_a(lambda + h, g) *
                      prod_bb;
  return out;
}

Cx q_factorial(std::size_t n, Cx q2) {
  Cx out(1.0, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    Cx bracket(0.0, 0.0);
    for (std::size_t m = 0; m < k; ++m) bracket += ipow(q2, m);
    out *= bracket;
  }
  return out;
}

Cx asymptotic_coefficient(const ModelParams& params) {
  params.validate();
  const std::size_t L = params.L;
  const Cx q = std::exp(params.gamma);
  const Cx t = std::exp(params.h);
  const Cx qinv = Cx(1.0, 0.0) / q;

  // q^{L(L-1)/2} / 2^{L(2L+1)} * (q - 1/q)^L * [L!]_{q^2}
  Cx out = ipow(q, L * (L - 1) / 2);
  out /= ipow(Cx(2.0, 0.0), L * (2 * L + 1));
  out *= ipow(q - qinv, L);
  out *= q_factorial(L, q * q);
  for (const Cx m : params.mu) {
    out *= t * std::exp(-m) - std::exp(m) / t;
  }
  return out;
}

Cx zbar_value(const ModelParams& params, const SpectralPoint& point) {
  Cx scale(0.0, 0.0);
  for (const Cx l : point.lambda) scale += l;
  return partition_function(params, point) *
         std::exp(2.0 * static_cast<double>(params.L) * scale);
}

ZbarGrid::ZbarGrid(const ModelParams& params, const std::vector<Cx>& nodes,
                   unsigned threads)
    : nodes_(nodes) {
  params.validate();
  const std::size_t L = params.L;
  const std::size_t n = nodes_.size();
  if (n == 0) throw InterpolationError("empty node set for grid evaluation");

  std::vector<CMatrix> creation(n);
  for (std::size_t m = 0; m < n; ++m) {
    creation[m] = b_operator(params, 0.5 * std::log(nodes_[m]));
  }

  std::size_t total = 1;
  for (std::size_t i = 0; i < L; ++i) total *= n;
  values_.assign(total, Cx(0.0, 0.0));

  parallel_for(total, threads, [&](std::size_t flat) {
    std::size_t digits[kMaxChainLength];
    std::size_t rem = flat;
    for (std::size_t i = L; i-- > 0;) {
      digits[i] = rem % n;
      rem /= n;
    }
    CVector v = vacuum(L);
    Cx rescale(1.0, 0.0);
    for (std::size_t i = L; i-- > 0;) {
      v = creation[digits[i]] * v;
      rescale *= ipow(nodes_[digits[i]], L);
    }
    values_[flat] = v.back() * rescale;
  });
}

Cx zbar_leading_coefficient(const ModelParams& params, double node_radius,
                            unsigned threads) {
  const std::size_t L = params.L;
  const std::size_t n = 2 * L + 1;
  const std::vector<Cx> nodes = circle_nodes(n, node_radius, 0.1);
  const std::vector<Cx> weights = leading_weights(nodes);
  const ZbarGrid grid(params, nodes, threads);

  std::vector<Cx> terms(grid.size());
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    Cx w(1.0, 0.0);
    std::size_t rem = flat;
    for (std::size_t i = L; i-- > 0;) {
      w *= weights[rem % n];
      rem /= n;
    }
    terms[flat] = grid.values()[flat] * w;
  }
  return canonical_sum(std::move(terms));
}

std::vector<Cx> zbar_axis_coefficients(const ModelParams& params,
                                       const SpectralPoint& point,
                                       std::size_t axis, std::size_t nnodes,
                                       double node_radius) {
  validate_point(params, point);
  if (axis >= params.L) throw DimensionError("axis out of range");
  const std::vector<Cx> nodes = circle_nodes(nnodes, node_radius, 0.1);
  std::vector<Cx> values(nnodes);
  SpectralPoint varied = point;
  for (std::size_t m = 0; m < nnodes; ++m) {
    varied.lambda[axis] = 0.5 * std::log(nodes[m]);
    values[m] = zbar_value(params, varied);
  }
  return lagrange_fit(nodes, values);
}

double symmetry_residual(const ModelParams& params, const SpectralPoint& point,
                         std::size_t i, std::size_t j) {
  validate_point(params, point);
  if (i >= params.L || j >= params.L || i == j) {
    throw DimensionError("invalid argument pair in symmetry_residual");
  }
  SpectralPoint swapped = point;
  std::swap(swapped.lambda[i], swapped.lambda[j]);
  return pair_residual(partition_function(params, point),
                       partition_function(params, swapped));
}

}  // namespace sixv
