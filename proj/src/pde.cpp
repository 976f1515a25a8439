#include "sixv/pde.hpp"

#include <cmath>
#include <numbers>

#include "sixv/errors.hpp"
#include "sixv/functional.hpp"
#include "sixv/interpolate.hpp"
#include "sixv/oracle.hpp"

namespace sixv {

PolyRep::PolyRep(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  std::size_t total = 1;
  for (const std::size_t n : shape_) {
    if (n == 0) throw DimensionError("coefficient counts must be positive");
    total *= n;
  }
  coeffs_.assign(total, Cx(0.0, 0.0));
}

Cx PolyRep::eval(const std::vector<Cx>& xs) const {
  if (xs.size() != nvars()) {
    throw DimensionError("evaluation point has wrong arity");
  }
  if (nvars() == 0) return coeffs_.empty() ? Cx(0.0, 0.0) : coeffs_[0];

  std::vector<Cx> work(coeffs_);
  std::size_t lines = work.size();
  for (std::size_t ax = nvars(); ax-- > 0;) {
    const std::size_t n = shape_[ax];
    lines /= n;
    for (std::size_t l = 0; l < lines; ++l) {
      Cx acc(0.0, 0.0);
      const std::size_t base = l * n;
      for (std::size_t k = n; k-- > 0;) acc = acc * xs[ax] + work[base + k];
      work[l] = acc;
    }
  }
  return work[0];
}

PolyRep PolyRep::derivative(std::size_t axis) const {
  if (axis >= nvars()) throw DimensionError("derivative axis out of range");
  const std::size_t n = shape_[axis];
  std::vector<std::size_t> out_shape = shape_;
  out_shape[axis] = n > 1 ? n - 1 : 1;
  PolyRep out(out_shape);
  if (n == 1) return out;  // constant along the axis

  std::size_t stride = 1;
  for (std::size_t ax = axis + 1; ax < nvars(); ++ax) stride *= shape_[ax];
  const std::size_t outer = coeffs_.size() / (n * stride);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      for (std::size_t s = 0; s < stride; ++s) {
        out.coeffs_[(o * (n - 1) + k) * stride + s] =
            static_cast<double>(k + 1) *
            coeffs_[(o * n + k + 1) * stride + s];
      }
    }
  }
  return out;
}

PolyRep PolyRep::top_slice(std::size_t axis) const {
  if (axis >= nvars()) throw DimensionError("slice axis out of range");
  const std::size_t n = shape_[axis];
  std::vector<std::size_t> out_shape;
  out_shape.reserve(nvars() - 1);
  for (std::size_t ax = 0; ax < nvars(); ++ax) {
    if (ax != axis) out_shape.push_back(shape_[ax]);
  }
  PolyRep out(out_shape);

  std::size_t stride = 1;
  for (std::size_t ax = axis + 1; ax < nvars(); ++ax) stride *= shape_[ax];
  const std::size_t outer = coeffs_.size() / (n * stride);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t s = 0; s < stride; ++s) {
      out.coeffs_[o * stride + s] = coeffs_[(o * n + n - 1) * stride + s];
    }
  }
  return out;
}

namespace {

// in-place per-line node-to-coefficient transform along one axis
void axis_transform(std::vector<Cx>& data,
                    const std::vector<std::size_t>& shape, std::size_t axis,
                    const std::vector<Cx>& nodes) {
  const std::size_t n = shape[axis];
  std::size_t stride = 1;
  for (std::size_t ax = axis + 1; ax < shape.size(); ++ax) stride *= shape[ax];
  const std::size_t outer = data.size() / (n * stride);

  std::vector<Cx> line(n);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t s = 0; s < stride; ++s) {
      const std::size_t base = o * n * stride + s;
      for (std::size_t k = 0; k < n; ++k) line[k] = data[base + k * stride];
      const std::vector<Cx> fitted = lagrange_fit(nodes, line);
      for (std::size_t k = 0; k < n; ++k) data[base + k * stride] = fitted[k];
    }
  }
}

}  // namespace

PolyRep interpolate_zbar(const ModelParams& params, double node_radius,
                         unsigned threads, std::size_t max_budget) {
  params.validate();
  if (params.L > max_budget) {
    throw BudgetError("coefficient grid needs (2L+1)^L evaluations; raise the "
                      "budget to go beyond L = " +
                      std::to_string(max_budget));
  }
  const std::size_t n = 2 * params.L + 1;
  const std::vector<Cx> nodes = circle_nodes(n, node_radius, 0.1);
  const ZbarGrid grid(params, nodes, threads);

  std::vector<std::size_t> shape(params.L, n);
  PolyRep out(shape);
  out.coeffs() = grid.values();
  for (std::size_t ax = 0; ax < params.L; ++ax) {
    axis_transform(out.coeffs(), shape, ax, nodes);
  }
  return out;
}

PolyRep random_polyrep(std::size_t nvars, std::size_t per_axis, Rng& rng) {
  PolyRep out(std::vector<std::size_t>(nvars, per_axis));
  for (auto& c : out.coeffs()) c = rng.normal_complex();
  return out;
}

SubstitutionPair apply_substitution(const PolyRep& poly, std::size_t i, Cx x0,
                                    const std::vector<Cx>& xs) {
  if (i >= poly.nvars()) throw DimensionError("substitution axis out of range");
  std::vector<Cx> replaced = xs;
  replaced[i] = x0;

  SubstitutionPair out;
  out.substitution = poly.eval(replaced);

  // truncated shift series sum_k (x0 - x_i)^k / k! d_i^k
  std::vector<Cx> terms;
  terms.reserve(poly.shape()[i]);
  PolyRep current = poly;
  Cx factor(1.0, 0.0);
  const Cx step = x0 - xs[i];
  for (std::size_t k = 0; k < poly.shape()[i]; ++k) {
    terms.push_back(factor * current.eval(xs));
    current = current.derivative(i);
    factor *= step / static_cast<double>(k + 1);
  }
  out.differential = canonical_sum(std::move(terms));
  return out;
}

namespace {

struct OperatorTerms {
  std::vector<Cx> values;  // [0]: coefficient term, [i+1]: substitution terms
  double abs_sum = 0.0;
};

OperatorTerms lbar_terms(const ModelParams& params, Cx x0,
                         const std::vector<Cx>& xs, const PolyRep& poly) {
  const std::size_t L = params.L;
  if (xs.size() != L || poly.nvars() != L) {
    throw DimensionError("probe arity must match the chain length");
  }
  const Cx lambda0 = 0.5 * std::log(x0);
  SpectralPoint point;
  point.lambda.resize(L);
  for (std::size_t j = 0; j < L; ++j) point.lambda[j] = 0.5 * std::log(xs[j]);

  const FunctionalCoefficients cf = coefficients(params, lambda0, point);

  Cx inv_all(1.0, 0.0);
  for (const Cx x : xs) inv_all *= ipow(Cx(1.0, 0.0) / x, L);
  const Cx inv_x0 = ipow(Cx(1.0, 0.0) / x0, L);

  OperatorTerms out;
  out.values.reserve(L + 1);
  out.values.push_back(cf.m0 * inv_all * poly.eval(xs));
  for (std::size_t i = 0; i < L; ++i) {
    const Cx rescale = cf.mi[i] * inv_x0 * inv_all * ipow(xs[i], L);
    std::vector<Cx> replaced = xs;
    replaced[i] = x0;
    out.values.push_back(rescale * poly.eval(replaced));
  }
  for (const Cx t : out.values) out.abs_sum += std::abs(t);
  return out;
}

Cx clear_factor(const ModelParams& params, Cx x0,
                const std::vector<Cx>& xs) {
  const Cx lambda0 = 0.5 * std::log(x0);
  Cx out = std::exp(static_cast<double>(params.L + 1) * lambda0);
  for (const Cx x : xs) {
    out *= weight_a(lambda0 + 0.5 * std::log(x), params.gamma);
  }
  return out;
}

}  // namespace

double lbar_residual(const ModelParams& params, Cx x0,
                     const std::vector<Cx>& xs, const PolyRep& poly) {
  params.validate();
  const OperatorTerms terms = lbar_terms(params, x0, xs, poly);
  return sum_residual(terms.values);
}

std::vector<double> extract_omegas(const ModelParams& params,
                                   const PolyRep& poly,
                                   const std::vector<Cx>& xs,
                                   double fit_radius,
                                   std::size_t extra_nodes) {
  params.validate();
  const std::size_t n = 2 * params.L + 1 + extra_nodes;
  const std::vector<Cx> nodes = circle_nodes(n, fit_radius, 0.05);

  std::vector<Cx> values(n);
  double scale = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const OperatorTerms terms = lbar_terms(params, nodes[m], xs, poly);
    const Cx clear = clear_factor(params, nodes[m], xs);
    values[m] = canonical_sum(terms.values) * clear;
    scale = std::max(scale, terms.abs_sum * std::abs(clear));
  }
  if (scale < 1e-300) {
    throw InterpolationError("operator terms vanished at every fit node");
  }

  const std::vector<Cx> coeffs = lagrange_fit(nodes, values);
  std::vector<double> out(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out[k] = std::abs(coeffs[k]) / scale;
  }
  return out;
}

namespace {

Cx abar(Cx omega, Cx x, Cx y) { return x * omega - Cx(1.0, 0.0) / (y * omega); }

double factorial_as_double(std::size_t n) {
  double out = 1.0;
  for (std::size_t k = 2; k <= n; ++k) out *= static_cast<double>(k);
  return out;
}

struct TopCoefficients {
  Cx potential;            // multiplies the undifferentiated polynomial
  std::vector<Cx> weights; // multiply the 2L-th derivatives
};

TopCoefficients top_coefficients(const ModelParams& params,
                                 const std::vector<Cx>& xs) {
  const std::size_t L = params.L;
  const Cx q = std::exp(params.gamma);
  const Cx t = std::exp(params.h);
  const Cx one(1.0, 0.0);
  std::vector<Cx> ys(L);
  for (std::size_t i = 0; i < L; ++i) ys[i] = std::exp(2.0 * params.mu[i]);

  TopCoefficients out;
  out.potential = (one / t) * (one - ipow(q, 2 * L));
  for (std::size_t i = 0; i < L; ++i) {
    out.potential +=
        t * (xs[i] * q * q + one / xs[i] - ys[i] - one / ys[i]);
  }

  out.weights.resize(L);
  for (std::size_t i = 0; i < L; ++i) {
    const Cx x = xs[i];
    const Cx pre = -abar(one, x, x) /
                   guarded(abar(q, x, x), "q x_i - 1/(q x_i)") /
                   factorial_as_double(2 * L);
    Cx s1 = q * abar(t, x, one);
    Cx s2 = abar(q / t, one, x);
    for (const Cx y : ys) {
      s1 *= abar(q, x, one / y) * abar(q, x, y);
      s2 *= abar(one, x, one / y) * abar(one, x, y);
    }
    for (std::size_t j = 0; j < L; ++j) {
      if (j == i) continue;
      const Cx xj = xs[j];
      s1 *= (abar(q, xj, one / x) / guarded(abar(one, xj, one / x), "x_j - x_i")) *
            (abar(one, xj, x) / guarded(abar(q, xj, x), "q x_j - 1/(q x_i)"));
      s2 *= (abar(q, x, one / xj) / guarded(abar(one, x, one / xj), "x_i - x_j")) *
            (abar(q * q, x, xj) / guarded(abar(q, x, xj), "q x_i - 1/(q x_j)"));
    }
    out.weights[i] = pre * (s1 + s2);
  }
  return out;
}

}  // namespace

double omega_top_residual(const ModelParams& params, const PolyRep& poly,
                          const std::vector<Cx>& xs) {
  params.validate();
  const std::size_t L = params.L;
  if (xs.size() != L || poly.nvars() != L) {
    throw DimensionError("probe arity must match the chain length");
  }
  const TopCoefficients top = top_coefficients(params, xs);
  const double fact = factorial_as_double(2 * L);

  std::vector<Cx> terms;
  terms.reserve(L + 1);
  terms.push_back(top.potential * poly.eval(xs));
  for (std::size_t i = 0; i < L; ++i) {
    const PolyRep slice = poly.top_slice(i);
    std::vector<Cx> rest;
    rest.reserve(L - 1);
    for (std::size_t j = 0; j < L; ++j) {
      if (j != i) rest.push_back(xs[j]);
    }
    terms.push_back(top.weights[i] * fact * slice.eval(rest));
  }
  return sum_residual(terms);
}

double pole_loop_residue(const ModelParams& params, const PolyRep& poly,
                         const std::vector<Cx>& xs, Cx center, double eps,
                         std::size_t samples) {
  params.validate();
  KahanAccumulator acc;
  double scale = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(samples);
    const Cx offset = eps * Cx(std::cos(theta), std::sin(theta));
    const Cx lambda0 = center + offset;
    const Cx x0 = std::exp(2.0 * lambda0);
    const OperatorTerms terms = lbar_terms(params, x0, xs, poly);
    const Cx f = canonical_sum(terms.values);
    acc.add(f * offset / static_cast<double>(samples));
    scale = std::max(scale, std::abs(f) * eps);
  }
  if (scale < 1e-300) {
    throw InterpolationError("operator vanished on the whole contour");
  }
  return std::abs(acc.sum) / scale;
}

ReductionOutcome reduction_system_check(
    const ModelParams& params, const PolyRep& poly,
    const std::vector<std::vector<Cx>>& probes) {
  params.validate();
  if (probes.empty()) {
    throw DimensionError("companion system needs at least one probe");
  }
  const std::size_t L = params.L;
  const std::size_t order = 2 * L;

  // derivs[i][k] holds d_i^{k+1} applied to the polynomial
  std::vector<std::vector<PolyRep>> derivs(L);
  for (std::size_t i = 0; i < L; ++i) {
    derivs[i].reserve(order);
    PolyRep current = poly.derivative(i);
    derivs[i].push_back(current);
    for (std::size_t k = 1; k < order; ++k) {
      current = current.derivative(i);
      derivs[i].push_back(current);
    }
  }

  ReductionOutcome out;
  out.length = 1 + L * (order - 1);

  for (const std::vector<Cx>& p : probes) {
    const TopCoefficients top = top_coefficients(params, p);
    std::vector<Cx> closing;
    closing.reserve(L + 1);
    closing.push_back(top.potential * poly.eval(p));
    for (std::size_t i = 0; i < L; ++i) {
      closing.push_back(top.weights[i] * derivs[i][order - 1].eval(p));
    }
    out.first_row = std::max(out.first_row, sum_residual(closing));

    // chain rows: the derivative of component k-1 must equal component k;
    // both sides are built from the same tensor, so this is structural
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t k = 0; k + 1 < order; ++k) {
        const PolyRep& prev = k == 0 ? poly : derivs[i][k - 1];
        const Cx lhs = prev.derivative(i).eval(p);
        const Cx rhs = derivs[i][k].eval(p);
        out.chain_rows = std::max(out.chain_rows, pair_residual(lhs, rhs));
      }
    }
  }
  return out;
}

}  // namespace sixv
