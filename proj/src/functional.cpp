#include "sixv/functional.hpp"

#include <algorithm>
#include <cmath>

#include "sixv/errors.hpp"
#include "sixv/oracle.hpp"

namespace sixv {

namespace {

Cx m0_coefficient(const ModelParams& params, Cx l0,
                  const std::vector<Cx>& lams) {
  const Cx g = params.gamma;
  const VacuumEigenvalues eig = eigenvalue_functions(params, l0);
  Cx prod(1.0, 0.0);
  for (const Cx lj : lams) {
    prod *= (weight_a(lj - l0, g) /
             guarded(weight_b(lj - l0), "b(lambda_j - lambda_0)")) *
            (weight_b(lj + l0) /
             guarded(weight_a(lj + l0, g), "a(lambda_j + lambda_0)"));
  }
  return eig.a_on_dual - eig.a_on_vacuum * prod;
}

Cx mi_coefficient(const ModelParams& params, std::size_t i, Cx l0,
                  const std::vector<Cx>& lams) {
  const Cx g = params.gamma;
  const Cx c = weight_c(g);
  const Cx li = lams[i];
  const VacuumEigenvalues eig = eigenvalue_functions(params, li);

  Cx t1 = (weight_b(2.0 * li) / weight_a(2.0 * li, g)) *
          (c / guarded(weight_b(li - l0), "b(lambda_i - lambda_0)")) *
          eig.a_on_vacuum;
  Cx t2 = (c / guarded(weight_a(li + l0, g), "a(lambda_i + lambda_0)")) *
          eig.dtilde_on_vacuum;
  for (std::size_t j = 0; j < lams.size(); ++j) {
    if (j == i) continue;
    const Cx lj = lams[j];
    const Cx bij = guarded(weight_b(lj - li), "b(lambda_j - lambda_i)");
    t1 *= (weight_a(lj - li, g) / bij) *
          (weight_b(lj + li) /
           guarded(weight_a(lj + li, g), "a(lambda_j + lambda_i)"));
    t2 *= (weight_a(li - lj, g) / (-bij)) *
          (weight_a(li + lj + g, g) /
           guarded(weight_b(li + lj + g), "a(lambda_i + lambda_j)"));
  }
  return t1 + t2;
}

}  // namespace

FunctionalCoefficients coefficients(const ModelParams& params, Cx lambda0,
                                    const SpectralPoint& point) {
  validate_point(params, point);
  FunctionalCoefficients out;
  out.m0 = m0_coefficient(params, lambda0, point.lambda);
  out.mi.resize(params.L);
  for (std::size_t i = 0; i < params.L; ++i) {
    out.mi[i] = mi_coefficient(params, i, lambda0, point.lambda);
  }
  return out;
}

double equation_residual(const ModelParams& params, Cx lambda0,
                         const SpectralPoint& point) {
  const FunctionalCoefficients cf = coefficients(params, lambda0, point);
  std::vector<Cx> terms;
  terms.reserve(params.L + 1);
  terms.push_back(cf.m0 * partition_function(params, point));
  for (std::size_t i = 0; i < params.L; ++i) {
    SpectralPoint swapped = point;
    swapped.lambda[i] = lambda0;
    terms.push_back(cf.mi[i] * partition_function(params, swapped));
  }
  return sum_residual(terms);
}

double permuted_equation_residual(const ModelParams& params, Cx lambda0,
                                  const SpectralPoint& point,
                                  const std::vector<std::size_t>& roles) {
  validate_point(params, point);
  const std::size_t n = params.L + 1;
  if (roles.size() != n) {
    throw DimensionError("roles must assign all L+1 values");
  }
  std::vector<bool> seen(n, false);
  for (const std::size_t r : roles) {
    if (r >= n || seen[r]) throw DimensionError("roles must be a permutation");
    seen[r] = true;
  }

  std::vector<Cx> values;
  values.reserve(n);
  values.push_back(lambda0);
  values.insert(values.end(), point.lambda.begin(), point.lambda.end());

  const Cx new_lambda0 = values[roles[0]];
  SpectralPoint permuted;
  permuted.lambda.reserve(params.L);
  for (std::size_t i = 1; i < n; ++i) {
    permuted.lambda.push_back(values[roles[i]]);
  }
  return equation_residual(params, new_lambda0, permuted);
}

ResiduePairing residue_pairing(const ModelParams& params,
                               const SpectralPoint& point, std::size_t k,
                               double eps) {
  validate_point(params, point);
  if (k >= params.L) throw DimensionError("index k out of range");
  const Cx g = params.gamma;
  const Cx lk = point.lambda[k];
  // symmetric probes cancel the analytic part to O(eps^2); a one-sided probe
  // leaves an O(eps) error that outgrows any fixed tolerance as L rises
  const Cx above = lk + Cx(eps, 0.0);
  const Cx below = lk - Cx(eps, 0.0);

  ResiduePairing out;
  out.m0_residue = 0.5 * eps *
                   (m0_coefficient(params, above, point.lambda) -
                    m0_coefficient(params, below, point.lambda));
  out.mk_residue = 0.5 * eps *
                   (mi_coefficient(params, k, above, point.lambda) -
                    mi_coefficient(params, k, below, point.lambda));

  const VacuumEigenvalues eig = eigenvalue_functions(params, lk);
  Cx closed = weight_c(g) * (weight_b(2.0 * lk) / weight_a(2.0 * lk, g)) *
              eig.a_on_vacuum;
  for (std::size_t j = 0; j < params.L; ++j) {
    if (j == k) continue;
    const Cx lj = point.lambda[j];
    closed *= (weight_a(lj - lk, g) /
               guarded(weight_b(lj - lk), "b(lambda_j - lambda_k)")) *
              (weight_b(lj + lk) /
               guarded(weight_a(lj + lk, g), "a(lambda_j + lambda_k)"));
  }
  out.closed_form = closed;
  return out;
}

Cx v_function(const ModelParams& params, const std::vector<Cx>& rest) {
  params.validate();
  if (rest.size() + 1 != params.L) {
    throw DimensionError("reduced point needs L-1 arguments");
  }
  const Cx g = params.gamma;
  const Cx mu1 = params.mu[0];
  SpectralPoint reduced;
  reduced.lambda.reserve(params.L);
  reduced.lambda.push_back(mu1 - g);
  reduced.lambda.insert(reduced.lambda.end(), rest.begin(), rest.end());
  Cx denom(1.0, 0.0);
  for (const Cx lj : rest) {
    denom *= guarded(weight_b(lj - mu1), "b(lambda_j - mu_1)") *
             guarded(weight_a(lj + mu1, g), "a(lambda_j + mu_1)");
  }
  return partition_function(params, reduced) / denom;
}

VerificationReport v_split_check(const ModelParams& params,
                                 const SpectralPoint& point) {
  validate_point(params, point);
  if (params.L < 2) {
    throw DimensionError("the split needs at least two arguments");
  }
  const Cx g = params.gamma;
  const Cx mu1 = params.mu[0];

  Cx kappa = guarded(weight_b(params.h + mu1), "b(h + mu_1)") *
             guarded(weight_b(2.0 * mu1 - 2.0 * g), "b(2 mu_1 - 2 gamma)");
  for (std::size_t j = 1; j < params.L; ++j) {
    kappa *= guarded(weight_b(mu1 - params.mu[j] - g), "b(mu_1 - mu_j - gamma)") *
             guarded(weight_b(mu1 + params.mu[j] - g), "b(mu_1 + mu_j - gamma)");
  }

  auto m_i = [&](std::size_t i) {
    const Cx li = point.lambda[i];
    Cx t1 = weight_b(li + params.h) /
            guarded(weight_a(li - mu1, g), "a(lambda_i - mu_1)");
    Cx t2 = weight_a(li - params.h, g) /
            guarded(weight_b(li + mu1), "b(lambda_i + mu_1)");
    for (std::size_t j = 0; j < params.L; ++j) {
      const Cx m = params.mu[j];
      t1 *= weight_a(li - m, g) * weight_a(li + m, g);
      t2 *= weight_b(li - m) * weight_b(li + m);
    }
    for (std::size_t k = 0; k < params.L; ++k) {
      if (k == i) continue;
      const Cx lk = point.lambda[k];
      const Cx bki = guarded(weight_b(lk - li), "b(lambda_k - lambda_i)");
      t1 *= (weight_a(lk - li, g) / bki) *
            (weight_b(lk + li) /
             guarded(weight_a(lk + li, g), "a(lambda_k + lambda_i)"));
      t2 *= (weight_a(li - lk, g) / (-bki)) *
            (weight_a(li + lk + g, g) /
             guarded(weight_b(li + lk + g), "a(lambda_i + lambda_k)"));
    }
    return t1 - t2;
  };

  std::vector<Cx> terms;
  terms.reserve(params.L);
  for (std::size_t i = 0; i < params.L; ++i) {
    std::vector<Cx> rest;
    rest.reserve(params.L - 1);
    for (std::size_t j = 0; j < params.L; ++j) {
      if (j != i) rest.push_back(point.lambda[j]);
    }
    Cx weight(1.0, 0.0);
    for (const Cx lj : rest) {
      weight *= weight_b(lj - mu1) * weight_a(lj + mu1, g);
    }
    const Cx a2i = guarded(weight_a(2.0 * point.lambda[i], g), "a(2 lambda_i)");
    terms.push_back((weight_b(2.0 * point.lambda[i]) / a2i) * weight *
                    m_i(i) * v_function(params, rest));
  }
  const Cx rhs = canonical_sum(terms) / kappa;
  const Cx lhs = partition_function(params, point);

  VerificationReport report;
  report.add("reduced_value_split", "reduced-value-split",
             pair_residual(lhs, rhs), params.L >= 3 ? 1e-9 : 1e-10);

  if (params.L >= 3) {
    std::vector<Cx> rest(point.lambda.begin() + 1, point.lambda.end());
    std::vector<Cx> swapped = rest;
    std::swap(swapped[0], swapped[1]);
    report.add("reduced_value_symmetry", "reduced-value-split",
               pair_residual(v_function(params, rest),
                             v_function(params, swapped)),
               1e-10);
  }
  return report;
}

}  // namespace sixv
