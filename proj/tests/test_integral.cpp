#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "doctest.h"
#include "sixv/errors.hpp"
#include "sixv/integral.hpp"
#include "sixv/model.hpp"
#include "sixv/oracle.hpp"
#include "sixv/rng.hpp"

using namespace sixv;

namespace {

ModelParams sample_params(std::size_t L, std::uint64_t seed = 11) {
  Rng rng(substream(seed, 90));
  ModelParams p;
  p.L = L;
  p.gamma = rng.signed_complex();
  p.h = rng.signed_complex();
  for (std::size_t i = 0; i < L; ++i) p.mu.push_back(rng.signed_complex());
  return p;
}

SpectralPoint sample_point(std::size_t L, std::uint64_t seed = 12) {
  Rng rng(substream(seed, 91));
  SpectralPoint p;
  for (std::size_t i = 0; i < L; ++i) p.lambda.push_back(rng.signed_complex());
  return p;
}

ModelParams pinned_params() {
  ModelParams p;
  p.L = 2;
  p.gamma = Cx(0.31, 0.11);
  p.h = Cx(0.83, -0.07);
  p.mu = {Cx(0.29, 0.05), Cx(-0.41, 0.13)};
  return p;
}

SpectralPoint pinned_point() {
  SpectralPoint p;
  p.lambda = {Cx(0.57, -0.23), Cx(0.19, 0.37)};
  return p;
}

const Cx kPinnedZ(-0.037169294561444244, 0.03861078169892158);

}  // namespace

TEST_CASE("length-one integrand reduces to a closed product") {
  Rng rng(substream(41, 1));
  const ModelParams p = sample_params(1, 600);
  const Cx g = p.gamma;
  const Cx mu1 = p.mu[0];
  for (int d = 0; d < 6; ++d) {
    const Cx w = rng.signed_complex();
    const Cx closed = weight_c(g) * (weight_b(p.h - mu1) / weight_b(p.h + mu1)) *
                      (weight_b(2.0 * w) / weight_a(2.0 * w, g)) *
                      (weight_b(w + p.h) * weight_a(w + mu1, g) -
                       weight_a(w - p.h, g) * weight_b(w - mu1));
    CHECK(pair_residual(h_function(p, {w}), closed) < 1e-12);
  }
}

TEST_CASE("residue sum agrees with the operator oracle") {
  for (std::size_t L : {1u, 2u, 3u, 4u}) {
    const ModelParams p = sample_params(L, 610 + L);
    const SpectralPoint pt = sample_point(L, 611 + L);
    const Cx direct = partition_function(p, pt);
    const Cx summed = residue_sum(p, pt);
    CHECK(pair_residual(direct, summed) < 1e-9);
  }
}

TEST_CASE("residue sum reproduces the pinned length-two value") {
  const Cx z = residue_sum(pinned_params(), pinned_point());
  CHECK(std::abs(z - kPinnedZ) / std::abs(kPinnedZ) < 1e-11);
}

TEST_CASE("integrand recursion ratio is w-independent") {
  Rng rng(substream(41, 2));
  for (std::size_t L : {2u, 3u}) {
    const ModelParams p = sample_params(L, 620 + L);
    std::optional<Cx> first;
    for (int d = 0; d < 5; ++d) {
      std::vector<Cx> w;
      for (std::size_t i = 0; i < L; ++i) w.push_back(rng.signed_complex());
      const Cx ratio = h_function(p, w) / h_recursion_rhs(p, w);
      if (!first) {
        first = ratio;
      } else {
        CHECK(std::abs(ratio - *first) / std::abs(*first) < 1e-10);
      }
    }
    // the constant is a genuine mismatch of normalisations, not 1
    CHECK(std::abs(*first - Cx(1, 0)) > 1e-3);
  }
}

TEST_CASE("coincident integration variables zero the integrand") {
  const ModelParams p = sample_params(2, 630);
  const Cx w(0.35, -0.12);
  CHECK(std::abs(h_function(p, {w, w})) == 0.0);
}

TEST_CASE("residue sum rejects coincident spectral arguments") {
  const ModelParams p = sample_params(2, 640);
  SpectralPoint pt;
  pt.lambda = {Cx(0.4, 0.1), Cx(0.4, 0.1)};
  CHECK_THROWS_AS(residue_sum(p, pt), SingularManifoldError);
}

TEST_CASE("residue sum is exactly invariant under argument swaps") {
  for (std::size_t L : {2u, 3u}) {
    const ModelParams p = sample_params(L, 645 + L);
    SpectralPoint pt = sample_point(L, 646 + L);
    const Cx base = residue_sum(p, pt);
    std::swap(pt.lambda[0], pt.lambda[1]);
    // the swap only relabels the terms of the permutation sum, and the
    // canonical ordering restores the same reduction sequence
    CHECK(residue_sum(p, pt) == base);
  }
}

TEST_CASE("homogeneous limit agrees across both evaluation routes") {
  std::vector<double> ladder;
  for (int k = 0; k < 7; ++k) ladder.push_back(0.2 * std::pow(0.5, k));
  for (std::size_t L : {2u, 3u}) {
    ModelParams p = sample_params(L, 650 + L);
    const Cx lambda(0.42, -0.17), mu_hom(0.23, 0.11);
    const Extrapolated oracle =
        homogeneous_limit(p, lambda, mu_hom, ladder, ZPath::Oracle);
    const Extrapolated residues =
        homogeneous_limit(p, lambda, mu_hom, ladder, ZPath::ResidueSum);
    CHECK_FALSE(oracle.diverged);
    CHECK_FALSE(residues.diverged);
    CHECK(pair_residual(oracle.value, residues.value) < 1e-6);

    const Extrapolated other =
        homogeneous_limit(p, lambda, mu_hom, ladder, ZPath::Oracle, 1);
    // both variants carry their own extrapolation error, so the agreement
    // floor sits above the single-route error estimate
    CHECK(pair_residual(oracle.value, other.value) < 1e-6);
  }
}

TEST_CASE("length-one homogeneous limit equals direct evaluation") {
  const ModelParams base = sample_params(1, 670);
  const Cx lambda(0.38, 0.21), mu_hom(0.19, -0.13);
  ModelParams at_limit = base;
  at_limit.mu = {mu_hom};
  SpectralPoint pt;
  pt.lambda = {lambda};
  const Cx direct = partition_function(at_limit, pt);

  std::vector<double> coarse{0.3, 0.15, 0.075, 0.0375};
  std::vector<double> fine;
  for (int k = 0; k < 7; ++k) fine.push_back(0.1 * std::pow(0.6, k));
  for (const auto& ladder : {coarse, fine}) {
    for (ZPath path : {ZPath::Oracle, ZPath::ResidueSum}) {
      const Extrapolated ex =
          homogeneous_limit(base, lambda, mu_hom, ladder, path);
      CHECK_FALSE(ex.diverged);
      CHECK(ex.error_estimate == 0.0);
      CHECK(pair_residual(ex.value, direct) < 1e-12);
    }
  }
}

TEST_CASE("epsilon ladders are validated") {
  const ModelParams p = sample_params(2, 660);
  const Cx lambda(0.4, -0.2), mu_hom(0.2, 0.1);
  CHECK_THROWS_AS(homogeneous_limit(p, lambda, mu_hom, {0.2, 0.1}),
                  InterpolationError);
  CHECK_THROWS_AS(homogeneous_limit(p, lambda, mu_hom, {0.2, 0.1, 0.15}),
                  InterpolationError);
  CHECK_THROWS_AS(homogeneous_limit(p, lambda, mu_hom, {0.2, 0.1, 1e-5}),
                  InterpolationError);
}
