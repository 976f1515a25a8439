#include "sixv/integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sixv/errors.hpp"
#include "sixv/oracle.hpp"

namespace sixv {

namespace {

// numerator factor attached to integration variable i, with the factors
// cancelled at the residue points removed and the difference squares from the
// measure absorbed; only genuinely singular guards remain
Cx theta_regular(const ModelParams& params, std::size_t i,
                 const std::vector<Cx>& w) {
  const Cx g = params.gamma;
  const std::size_t L = params.L;

  Cx t1 = weight_b(w[i] + params.h) * weight_a(w[i] + params.mu[i], g);
  for (std::size_t j = i + 1; j < L; ++j) {
    t1 *= weight_a(w[i] - params.mu[j], g) * weight_a(w[i] + params.mu[j], g);
  }
  for (std::size_t k = i + 1; k < L; ++k) {
    t1 *= (-weight_b(w[i] - w[k])) * weight_a(w[k] - w[i], g) *
          weight_b(w[k] + w[i]) /
          guarded(weight_a(w[k] + w[i], g), "a(w_i + w_k)");
  }

  Cx t2 = weight_a(w[i] - params.h, g) * weight_b(w[i] - params.mu[i]);
  for (std::size_t j = i + 1; j < L; ++j) {
    t2 *= weight_b(w[i] - params.mu[j]) * weight_b(w[i] + params.mu[j]);
  }
  for (std::size_t k = i + 1; k < L; ++k) {
    t2 *= weight_b(w[i] - w[k]) * weight_a(w[i] - w[k], g) *
          weight_a(w[i] + w[k] + g, g) /
          guarded(weight_b(w[i] + w[k] + g), "a(w_i + w_k)");
  }
  return t1 - t2;
}

}  // namespace

Cx h_function(const ModelParams& params, const std::vector<Cx>& w) {
  params.validate();
  if (w.size() != params.L) {
    throw DimensionError("integration tuple needs L entries");
  }
  const Cx g = params.gamma;
  const std::size_t L = params.L;

  Cx out = ipow(weight_c(g), L);
  for (std::size_t i = 0; i < L; ++i) {
    out *= (weight_b(2.0 * w[i]) /
            guarded(weight_a(2.0 * w[i], g), "a(2 w_i)")) *
           (weight_b(params.h - params.mu[i]) /
            guarded(weight_b(params.h + params.mu[i]), "b(h + mu_i)")) *
           theta_regular(params, i, w);
  }
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      out *= weight_a(params.mu[i] + w[j], g) * weight_b(params.mu[i] - w[j]);
    }
  }
  return out;
}

Cx residue_sum(const ModelParams& params, const SpectralPoint& point) {
  validate_point(params, point);
  const std::size_t L = params.L;
  const std::vector<Cx>& lams = point.lambda;

  std::vector<std::size_t> sigma(L);
  std::iota(sigma.begin(), sigma.end(), 0);

  std::vector<Cx> terms;
  std::vector<Cx> w(L);
  do {
    for (std::size_t i = 0; i < L; ++i) w[i] = lams[sigma[i]];
    Cx denom(1.0, 0.0);
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t j = 0; j < L; ++j) {
        if (j == sigma[i]) continue;
        denom *= guarded(weight_b(lams[sigma[i]] - lams[j]),
                         "b(lambda_i - lambda_j)");
      }
    }
    terms.push_back(h_function(params, w) / denom);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  return canonical_sum(std::move(terms));
}

Cx h_recursion_rhs(const ModelParams& params, const std::vector<Cx>& w) {
  params.validate();
  if (params.L < 2) {
    throw DimensionError("the recursion needs L >= 2");
  }
  if (w.size() != params.L) {
    throw DimensionError("integration tuple needs L entries");
  }
  const Cx g = params.gamma;
  const std::size_t L = params.L;
  const Cx mu1 = params.mu[0];

  ModelParams reduced;
  reduced.L = L - 1;
  reduced.gamma = g;
  reduced.h = params.h;
  reduced.mu.assign(params.mu.begin() + 1, params.mu.end());
  const std::vector<Cx> w_rest(w.begin() + 1, w.end());

  Cx pref = h_function(reduced, w_rest) /
            guarded(weight_b(params.h + mu1), "b(h + mu_1)") *
            (weight_b(2.0 * w[0]) /
             guarded(weight_a(2.0 * w[0], g), "a(2 w_1)"));
  for (std::size_t j = 1; j < L; ++j) {
    pref *= weight_b(mu1 - w[j]) * weight_a(mu1 + w[j], g);
  }

  Cx kappa = guarded(weight_b(2.0 * mu1 - 2.0 * g), "b(2 mu_1 - 2 gamma)");
  for (std::size_t j = 1; j < L; ++j) {
    kappa *= guarded(weight_b(mu1 - params.mu[j] - g), "b(mu_1 - mu_j - gamma)") *
             guarded(weight_b(mu1 + params.mu[j] - g), "b(mu_1 + mu_j - gamma)");
  }

  // first-variable numerator with the full mu product and the difference
  // squares folded in
  Cx t1 = weight_b(w[0] + params.h) * weight_a(w[0] + mu1, g);
  for (std::size_t j = 1; j < L; ++j) {
    t1 *= weight_a(w[0] - params.mu[j], g) * weight_a(w[0] + params.mu[j], g);
  }
  for (std::size_t k = 1; k < L; ++k) {
    t1 *= (-weight_b(w[0] - w[k])) * weight_a(w[k] - w[0], g) *
          weight_b(w[k] + w[0]) /
          guarded(weight_a(w[k] + w[0], g), "a(w_1 + w_k)");
  }
  Cx t2 = weight_a(w[0] - params.h, g) * weight_b(w[0] - mu1);
  for (std::size_t j = 1; j < L; ++j) {
    t2 *= weight_b(w[0] - params.mu[j]) * weight_b(w[0] + params.mu[j]);
  }
  for (std::size_t k = 1; k < L; ++k) {
    t2 *= weight_b(w[0] - w[k]) * weight_a(w[0] - w[k], g) *
          weight_a(w[0] + w[k] + g, g) /
          guarded(weight_b(w[0] + w[k] + g), "a(w_1 + w_k)");
  }

  return pref / kappa * (t1 - t2);
}

Extrapolated homogeneous_limit(const ModelParams& params, Cx lambda, Cx mu_hom,
                               const std::vector<double>& eps_ladder,
                               ZPath path, unsigned variant) {
  params.validate();
  if (eps_ladder.size() < 3) {
    throw InterpolationError("epsilon ladder needs at least 3 entries");
  }
  for (std::size_t k = 0; k < eps_ladder.size(); ++k) {
    if (eps_ladder[k] < 1e-3) {
      throw InterpolationError(
          "epsilon ladder entries must stay >= 1e-3; smaller separations land "
          "on the coincident-argument manifold");
    }
    if (k > 0 && eps_ladder[k] >= eps_ladder[k - 1]) {
      throw InterpolationError("epsilon ladder must decrease strictly");
    }
  }

  const std::size_t L = params.L;
  if (L == 1) {
    // a single spectral parameter is already homogeneous, so no separation
    // offsets are needed and the limit is the plain evaluation
    ModelParams at_limit = params;
    at_limit.mu = {mu_hom};
    SpectralPoint point;
    point.lambda = {lambda};
    const Cx value = path == ZPath::Oracle ? partition_function(at_limit, point)
                                           : residue_sum(at_limit, point);
    return Extrapolated{value, 0.0, false};
  }

  const double phase_l = variant == 0 ? 0.13 : 0.31;
  const double phase_m = variant == 0 ? 0.57 : 0.71;
  std::vector<Cx> dir_l(L), dir_m(L);
  for (std::size_t j = 0; j < L; ++j) {
    const double tl =
        2.0 * std::numbers::pi * (static_cast<double>(j) + phase_l) /
        static_cast<double>(L);
    const double tm =
        2.0 * std::numbers::pi * (static_cast<double>(j) + phase_m) /
        static_cast<double>(L);
    dir_l[j] = Cx(std::cos(tl), std::sin(tl));
    dir_m[j] = Cx(std::cos(tm), std::sin(tm));
  }

  std::vector<Cx> values(eps_ladder.size());
  for (std::size_t k = 0; k < eps_ladder.size(); ++k) {
    const double eps = eps_ladder[k];
    ModelParams separated = params;
    SpectralPoint point;
    point.lambda.resize(L);
    for (std::size_t j = 0; j < L; ++j) {
      separated.mu[j] = mu_hom + eps * dir_m[j];
      point.lambda[j] = lambda + eps * dir_l[j];
    }
    values[k] = path == ZPath::Oracle ? partition_function(separated, point)
                                      : residue_sum(separated, point);
  }
  return neville_to_zero(eps_ladder, values);
}

}  // namespace sixv
