#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "sixv/algebra.hpp"
#include "sixv/errors.hpp"
#include "sixv/model.hpp"
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

}  // namespace

TEST_CASE("vertex matrix entries sit in the documented slots") {
  const Cx lambda(0.4, -0.2), gamma(0.3, 0.1);
  const CMatrix r = r_matrix(lambda, gamma);
  CHECK(std::abs(r(0, 0) - std::sinh(lambda + gamma)) < 1e-15);
  CHECK(std::abs(r(3, 3) - std::sinh(lambda + gamma)) < 1e-15);
  CHECK(std::abs(r(1, 1) - std::sinh(lambda)) < 1e-15);
  CHECK(std::abs(r(2, 2) - std::sinh(lambda)) < 1e-15);
  CHECK(std::abs(r(1, 2) - std::sinh(gamma)) < 1e-15);
  CHECK(std::abs(r(2, 1) - std::sinh(gamma)) < 1e-15);
  CHECK(std::abs(r(0, 1)) == 0.0);
  CHECK(std::abs(r(3, 0)) == 0.0);

  const Cx h(0.8, -0.1);
  const CMatrix k = k_matrix(lambda, h);
  CHECK(std::abs(k(0, 0) - std::sinh(h + lambda)) < 1e-15);
  CHECK(std::abs(k(1, 1) - std::sinh(h - lambda)) < 1e-15);
  CHECK(std::abs(k(0, 1)) == 0.0);
}

TEST_CASE("weights and matrices collapse correctly on the axes") {
  const Cx gamma(0.3, 0.1), lambda(0.7, -0.2), h(0.8, -0.1);

  CHECK(std::abs(weight_b(Cx(0, 0))) == 0.0);
  CHECK(std::abs(weight_a(Cx(0, 0), gamma) - weight_c(gamma)) < 1e-15);
  CHECK(std::abs(weight_a(lambda, Cx(0, 0)) - weight_b(lambda)) < 1e-15);
  const Cx addition = std::sinh(lambda) * std::cosh(gamma) +
                      std::cosh(lambda) * std::sinh(gamma);
  CHECK(std::abs(weight_a(lambda, gamma) - addition) < 1e-15);

  // the vertex matrix at argument zero is the crossing weight times the
  // two-site swap
  const CMatrix r0 = r_matrix(Cx(0, 0), gamma);
  CMatrix swap(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = Cx(1, 0);
  CHECK(pair_residual(r0, weight_c(gamma) * swap) < 1e-15);

  const CMatrix r_free = r_matrix(lambda, Cx(0, 0));
  CHECK(pair_residual(r_free, weight_b(lambda) * CMatrix::identity(4)) <
        1e-15);

  const CMatrix k0 = k_matrix(Cx(0, 0), h);
  CHECK(pair_residual(k0, std::sinh(h) * CMatrix::identity(2)) < 1e-15);
  const CMatrix k_odd = k_matrix(lambda, Cx(0, 0));
  CHECK(std::abs(k_odd(0, 0) - std::sinh(lambda)) < 1e-15);
  CHECK(std::abs(k_odd(1, 1) + std::sinh(lambda)) < 1e-15);
}

TEST_CASE("yang-baxter, unitarity, reflection equation hold at random draws") {
  Rng rng(substream(3, 1));
  for (int d = 0; d < 5; ++d) {
    const Cx g = rng.signed_complex(), l1 = rng.signed_complex(),
             l2 = rng.signed_complex(), h = rng.signed_complex();
    CHECK(ybe_residual(l1, l2, g) < 1e-13);
    CHECK(unitarity_residual(l1, g) < 1e-13);
    CHECK(reflection_equation_residual(l1, l2, g, h) < 1e-13);
  }
}

TEST_CASE("quantum group generators satisfy the defining relations") {
  const Cx q(1.3, 0.4);
  const QuantumGroupRep rep = uq_sl2_generators(q);
  const CMatrix lhs = rep.k * rep.x_plus;
  const CMatrix rhs = (q * q) * (rep.x_plus * rep.k);
  CHECK(pair_residual(lhs, rhs) < 1e-15);
  const CMatrix lhs2 = rep.k * rep.x_minus;
  const CMatrix rhs2 = (Cx(1, 0) / (q * q)) * (rep.x_minus * rep.k);
  CHECK(pair_residual(lhs2, rhs2) < 1e-15);

  const CMatrix comm = rep.x_plus * rep.x_minus - rep.x_minus * rep.x_plus;
  CMatrix cartan(2, 2);
  cartan(0, 0) = (q - Cx(1, 0) / q) / (q - Cx(1, 0) / q);
  cartan(1, 1) = (Cx(1, 0) / q - q) / (q - Cx(1, 0) / q);
  CHECK(pair_residual(comm, cartan) < 1e-15);
  CHECK(pair_residual(rep.k_half * rep.k_half, rep.k) < 1e-15);

  // classical point: the commutator degenerates to the plain Cartan matrix
  const QuantumGroupRep classical = uq_sl2_generators(Cx(1, 0));
  const CMatrix comm1 = classical.x_plus * classical.x_minus -
                        classical.x_minus * classical.x_plus;
  CMatrix sz(2, 2);
  sz(0, 0) = Cx(1, 0);
  sz(1, 1) = Cx(-1, 0);
  CHECK(pair_residual(comm1, sz) < 1e-15);
}

TEST_CASE("length-one blocks match the quantum group combination") {
  // frozen draw; the assembled forms pin the exponential parametrisation
  const Cx g(0.37, 0.21), mu1(0.23, -0.11), lam(0.41, 0.17);
  ModelParams p;
  p.L = 1;
  p.gamma = g;
  p.h = Cx(0.9, -0.3);
  p.mu = {mu1};

  const BlockSet t = monodromy(p, lam, false);
  const Cx q = std::exp(g);
  const Cx x = std::exp(2.0 * lam), y = std::exp(2.0 * mu1);
  const QuantumGroupRep rep = uq_sl2_generators(q);
  const Cx xr = std::sqrt(x), yr = std::sqrt(y), qr = std::sqrt(q);

  CMatrix k_half_inv(2, 2);
  k_half_inv(0, 0) = Cx(1, 0) / rep.k_half(0, 0);
  k_half_inv(1, 1) = Cx(1, 0) / rep.k_half(1, 1);
  const CMatrix a_expect =
      (0.5 / xr) * ((x * qr / yr) * rep.k_half - (yr / qr) * k_half_inv);
  const CMatrix d_expect =
      (0.5 / xr) * ((x * qr / yr) * k_half_inv - (yr / qr) * rep.k_half);
  const CMatrix b_expect = (0.5 * (q - Cx(1, 0) / q)) * rep.x_minus;
  const CMatrix c_expect = (0.5 * (q - Cx(1, 0) / q)) * rep.x_plus;

  CHECK(pair_residual(t.a, a_expect) < 1e-14);
  CHECK(pair_residual(t.b, b_expect) < 1e-14);
  CHECK(pair_residual(t.c, c_expect) < 1e-14);
  CHECK(pair_residual(t.d, d_expect) < 1e-14);
}

TEST_CASE("site ordering pins: creation entries name their inhomogeneity") {
  // frozen draw distinguishing the two possible product orders
  const Cx g(0.37, 0.21), lam(0.41, 0.17);
  ModelParams p;
  p.L = 2;
  p.gamma = g;
  p.h = Cx(0.9, -0.3);
  p.mu = {Cx(0.23, -0.11), Cx(-0.52, 0.31)};

  const Cx c = std::sinh(g);
  const BlockSet t = monodromy(p, lam, false);
  // basis index = 2*site1 + site2, site 1 most significant
  CHECK(std::abs(t.b(2, 0) - c * std::sinh(lam - p.mu[1] + g)) < 1e-14);
  CHECK(std::abs(t.b(1, 0) - c * std::sinh(lam - p.mu[0])) < 1e-14);

  const BlockSet tb = monodromy(p, lam, true);
  CHECK(std::abs(tb.b(1, 0) - c * std::sinh(lam + p.mu[0] + g)) < 1e-14);
  CHECK(std::abs(tb.b(2, 0) - c * std::sinh(lam + p.mu[1])) < 1e-14);
}

TEST_CASE("vacuum weight actions match their product formulas") {
  Rng rng(substream(3, 2));
  for (std::size_t L : {1u, 2u, 3u}) {
    const ModelParams p = sample_params(L, 100 + L);
    const auto rows = vacuum_weight_actions(p, rng.signed_complex());
    CHECK(rows.size() == 12);
    for (const auto& [name, residual] : rows) {
      INFO(name);
      CHECK(residual < 1e-13);
    }
  }
}

TEST_CASE("reflection algebra holds for the double-row blocks") {
  Rng rng(substream(3, 3));
  for (std::size_t L : {1u, 2u}) {
    const ModelParams p = sample_params(L, 200 + L);
    CHECK(reflection_algebra_residual(p, rng.signed_complex(),
                                      rng.signed_complex()) < 1e-12);
  }
}

TEST_CASE("double-row blocks compose from row, boundary, returning row") {
  Rng rng(substream(3, 4));
  for (std::size_t L : {1u, 2u, 3u}) {
    const ModelParams p = sample_params(L, 300 + L);
    CHECK(double_row_composition_residual(p, rng.signed_complex()) < 1e-13);
  }
}

TEST_CASE("exchange relations for the double-row blocks") {
  Rng rng(substream(3, 5));
  for (std::size_t L : {1u, 2u, 3u}) {
    const ModelParams p = sample_params(L, 400 + L);
    const auto rows =
        exchange_residuals(p, rng.signed_complex(), rng.signed_complex());
    CHECK(rows.size() == 5);
    for (const auto& [name, residual] : rows) {
      INFO(name);
      CHECK(residual < 1e-12);
    }
  }
}

TEST_CASE("dtilde construction refuses the shift singularity") {
  ModelParams p = sample_params(1, 500);
  // 2 lambda + gamma = 0 makes the shift denominator vanish
  const Cx bad = -0.5 * p.gamma;
  CHECK_THROWS_AS(double_row(p, bad), SingularManifoldError);
  // the creation block alone stays finite there
  CHECK(max_abs(b_operator(p, bad)) > 0.0);
}

TEST_CASE("parameter validation rejects malformed inputs") {
  ModelParams p;
  p.L = 0;
  CHECK_THROWS_AS(p.validate(), DimensionError);
  p.L = 2;
  p.mu = {Cx(0.1, 0.2)};
  CHECK_THROWS_AS(p.validate(), DimensionError);
  p.mu.push_back(Cx(-0.3, 0.4));
  CHECK_NOTHROW(p.validate());
  SpectralPoint pt;
  pt.lambda = {Cx(0.5, 0.1)};
  CHECK_THROWS_AS(validate_point(p, pt), DimensionError);
}
