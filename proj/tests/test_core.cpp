#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "sixv/algebra.hpp"
#include "sixv/cmatrix.hpp"
#include "sixv/errors.hpp"
#include "sixv/interpolate.hpp"
#include "sixv/model.hpp"
#include "sixv/report.hpp"
#include "sixv/rng.hpp"

using namespace sixv;

TEST_CASE("matrix product and kron agree with hand results") {
  CMatrix a(2, 2);
  a(0, 0) = Cx(1, 1);
  a(0, 1) = Cx(2, 0);
  a(1, 0) = Cx(0, -1);
  a(1, 1) = Cx(1, 0);
  CMatrix b(2, 2);
  b(0, 0) = Cx(0, 1);
  b(0, 1) = Cx(1, 0);
  b(1, 0) = Cx(3, 0);
  b(1, 1) = Cx(0, 0);

  const CMatrix p = a * b;
  CHECK(std::abs(p(0, 0) - Cx(5, 1)) < 1e-15);   // (1+i)i + 2*3
  CHECK(std::abs(p(0, 1) - Cx(1, 1)) < 1e-15);
  CHECK(std::abs(p(1, 0) - Cx(4, 0)) < 1e-15);   // (-i)(i) + 3
  CHECK(std::abs(p(1, 1) - Cx(0, -1)) < 1e-15);

  const CMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(std::abs(k(0, 1) - Cx(1, 1)) < 1e-15);      // a00 * b01
  CHECK(std::abs(k(2, 1) - Cx(1, 0) * b(0, 1) * Cx(0, -1)) < 1e-15);
  CHECK(std::abs(k(3, 2) - Cx(3, 0)) < 1e-15);      // a11 * b10

  CHECK_THROWS_AS(a * CMatrix(3, 3), DimensionError);
  CHECK_THROWS_AS(kron(a, CMatrix()), DimensionError);
}

namespace {

CMatrix random_matrix(std::size_t n, Rng& rng) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.signed_complex();
  }
  return m;
}

double relative_gap(const CMatrix& lhs, const CMatrix& rhs) {
  REQUIRE(lhs.rows() == rhs.rows());
  REQUIRE(lhs.cols() == rhs.cols());
  double gap = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      gap = std::max(gap, std::abs(lhs(i, j) - rhs(i, j)));
      scale = std::max(scale, std::abs(lhs(i, j)) + std::abs(rhs(i, j)));
    }
  }
  return scale > 0.0 ? gap / scale : gap;
}

}  // namespace

TEST_CASE("kron identities, associativity and the mixed product") {
  const CMatrix i2 = CMatrix::identity(2);
  CHECK(relative_gap(kron(i2, i2), CMatrix::identity(4)) == 0.0);

  const Cx q(0.8, 0.3);
  CMatrix diag(2, 2);
  diag(0, 0) = q;
  diag(1, 1) = 1.0 / q;
  const CMatrix dk = kron(diag, i2);
  for (std::size_t m = 0; m < 4; ++m) {
    const Cx expect = m < 2 ? q : 1.0 / q;
    CHECK(std::abs(dk(m, m) - expect) < 1e-15);
  }

  Rng rng(substream(61, 1));
  const CMatrix a = random_matrix(2, rng);
  const CMatrix b = random_matrix(2, rng);
  const CMatrix c = random_matrix(2, rng);
  const CMatrix d = random_matrix(2, rng);
  CHECK(relative_gap(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
  CHECK(relative_gap(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-13);
}

TEST_CASE("kron of the quantum group pair matches the index formula") {
  const Cx q(0.7, 0.45);
  const QuantumGroupRep rep = uq_sl2_generators(q);
  const CMatrix composite = kron(rep.x_minus, rep.k);
  CMatrix direct(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      direct(i, j) = rep.x_minus(i / 2, j / 2) * rep.k(i % 2, j % 2);
    }
  }
  CHECK(relative_gap(composite, direct) == 0.0);
}

TEST_CASE("matrix_element pairs bilinearly, no conjugation") {
  CMatrix m = CMatrix::identity(2);
  const CVector e1 = {Cx(1, 0), Cx(0, 0)};
  const CVector e2 = {Cx(0, 0), Cx(1, 0)};
  CHECK(matrix_element(e1, m, e1) == Cx(1, 0));
  CHECK(matrix_element(e1, m, e2) == Cx(0, 0));

  const CVector bra = {Cx(0, 1), Cx(0, 0)};
  const CVector ket = {Cx(0, 1), Cx(0, 0)};
  // with conjugation this would be 1; bilinear gives i*i = -1
  CHECK(std::abs(matrix_element(bra, m, ket) - Cx(-1, 0)) < 1e-15);
}

TEST_CASE("canonical_sum is order independent and compensated") {
  std::vector<Cx> terms = {Cx(1e16, 0), Cx(1, 0), Cx(-1e16, 0)};
  CHECK(std::abs(canonical_sum(terms) - Cx(1, 0)) < 1e-15);
  std::vector<Cx> shuffled = {terms[1], terms[2], terms[0]};
  CHECK(canonical_sum(terms) == canonical_sum(shuffled));
}

TEST_CASE("guarded flags near-zero values with the manifold name") {
  CHECK_THROWS_AS(guarded(Cx(1e-9, 0), "a(2 lambda)"), SingularManifoldError);
  try {
    guarded(Cx(0, 5e-10), "b(lambda_1 - lambda_2)");
    FAIL("expected a throw");
  } catch (const SingularManifoldError& e) {
    CHECK(e.manifold == "b(lambda_1 - lambda_2)");
    CHECK(e.magnitude < kDeltaSing);
  }
  CHECK(std::abs(guarded(Cx(0.5, 0), "x") - Cx(0.5, 0)) < 1e-16);
}

TEST_CASE("lagrange_fit reproduces known coefficients") {
  // p(x) = (2+i) + 3x - x^2 + (0.5 - 2i) x^3
  const std::vector<Cx> truth = {Cx(2, 1), Cx(3, 0), Cx(-1, 0), Cx(0.5, -2)};
  const std::vector<Cx> nodes = circle_nodes(4, 1.0, 0.3);
  std::vector<Cx> values;
  for (const Cx x : nodes) values.push_back(polyval(truth, x));
  const std::vector<Cx> fitted = lagrange_fit(nodes, values);
  for (std::size_t k = 0; k < truth.size(); ++k) {
    CHECK(std::abs(fitted[k] - truth[k]) < 1e-13);
  }

  const std::vector<Cx> w = leading_weights(nodes);
  Cx top(0, 0);
  for (std::size_t m = 0; m < nodes.size(); ++m) top += w[m] * values[m];
  CHECK(std::abs(top - truth[3]) < 1e-13);

  CHECK_THROWS_AS(lagrange_fit({Cx(1, 0), Cx(1, 0)}, {Cx(0, 0), Cx(0, 0)}),
                  InterpolationError);
}

TEST_CASE("fits on circle nodes stay accurate through degree twelve") {
  Rng rng(substream(61, 2));
  std::vector<Cx> truth;
  for (int k = 0; k <= 12; ++k) truth.push_back(rng.signed_complex());

  const std::vector<Cx> nodes = circle_nodes(13, 1.0, 0.17);
  std::vector<Cx> values;
  for (const Cx x : nodes) values.push_back(polyval(truth, x));
  const std::vector<Cx> fitted = lagrange_fit(nodes, values);
  for (int d = 0; d < 10; ++d) {
    const Cx x = rng.annulus(0.5, 1.3);
    CHECK(pair_residual(polyval(fitted, x), polyval(truth, x)) < 1e-11);
  }

  // exact roots of unity, lower degree: coefficients come back directly
  std::vector<Cx> quartic;
  for (int k = 0; k <= 4; ++k) quartic.push_back(rng.signed_complex());
  const std::vector<Cx> unity = circle_nodes(5, 1.0, 0.0);
  std::vector<Cx> samples;
  for (const Cx x : unity) samples.push_back(polyval(quartic, x));
  const std::vector<Cx> back = lagrange_fit(unity, samples);
  for (std::size_t k = 0; k < quartic.size(); ++k) {
    CHECK(std::abs(back[k] - quartic[k]) / std::abs(quartic[k]) < 1e-12);
  }
}

TEST_CASE("circle nodes respect count, radius, phase") {
  const std::vector<Cx> nodes = circle_nodes(5, 2.0, 0.1);
  CHECK(nodes.size() == 5);
  for (const Cx z : nodes) CHECK(std::abs(std::abs(z) - 2.0) < 1e-14);
  CHECK(std::abs(std::arg(nodes[0]) - 0.1) < 1e-14);
  CHECK_THROWS_AS(circle_nodes(0), InterpolationError);
  CHECK_THROWS_AS(circle_nodes(3, -1.0), InterpolationError);
}

TEST_CASE("extrapolation to zero recovers the limit of a smooth ladder") {
  // f(eps) = value + c1 eps + c2 eps^2 + c3 eps^3
  const Cx value(0.7, -0.3);
  std::vector<double> eps;
  std::vector<Cx> vals;
  for (int k = 0; k < 7; ++k) {
    const double e = 0.2 * std::pow(0.5, k);
    eps.push_back(e);
    vals.push_back(value + Cx(0.4, 0.1) * e + Cx(-0.2, 0.3) * e * e +
                   Cx(0.05, 0.02) * e * e * e);
  }
  const Extrapolated out = neville_to_zero(eps, vals);
  CHECK(std::abs(out.value - value) < 1e-14);
  CHECK(out.error_estimate < 1e-10);
  CHECK_FALSE(out.diverged);

  // a non-smooth ladder must raise the divergence flag
  std::vector<Cx> rough = vals;
  for (std::size_t k = 0; k < rough.size(); ++k) {
    rough[k] += Cx((k % 2 == 0) ? 0.05 : -0.05, 0.0);
  }
  CHECK(neville_to_zero(eps, rough).diverged);

  CHECK_THROWS_AS(neville_to_zero({0.1, 0.05}, {Cx(), Cx()}),
                  InterpolationError);
}

TEST_CASE("substream decorrelates check and draw labels") {
  CHECK(substream(7, 1, 0) != substream(7, 2, 0));
  CHECK(substream(7, 1, 0) != substream(7, 1, 1));
  CHECK(substream(7, 3, 2) == substream(7, 3, 2));
  Rng a(substream(7, 3));
  Rng b(substream(7, 3));
  CHECK(a.signed_complex() == b.signed_complex());
}

TEST_CASE("report serialisation carries rows, senses and the verdict") {
  VerificationReport report;
  report.config_hash = "00ff";
  report.add("alpha", "anchor-one", 1e-12, 1e-10);
  report.add("beta", "anchor-two", 0.5, 1e-2, Sense::Above);
  CHECK(report.pass());
  report.add("gamma_row", "anchor-three", 2e-2, 1e-2);
  CHECK_FALSE(report.pass());
  CHECK(report.find("beta") != nullptr);
  CHECK(report.find("missing") == nullptr);

  const std::string json = report_to_json(report);
  CHECK(json.find("\"config_hash\": \"00ff\"") != std::string::npos);
  CHECK(json.find("\"name\": \"alpha\"") != std::string::npos);
  CHECK(json.find("\"pass\": false") != std::string::npos);

  const std::string csv = report_to_csv(report);
  CHECK(csv.rfind("name,anchor,residual,tol,pass\n", 0) == 0);
  CHECK(csv.find("beta,anchor-two,0.5,0.01,true") != std::string::npos);

  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(hash_hex("abc") == hash_hex("abc"));
  CHECK(hash_hex("abc") != hash_hex("abd"));
}
