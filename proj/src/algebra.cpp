#include "sixv/algebra.hpp"

#include <cmath>
#include <functional>

#include "sixv/errors.hpp"

namespace sixv {

CMatrix r_matrix(Cx lambda, Cx gamma) {
  const Cx a = weight_a(lambda, gamma), b = weight_b(lambda),
           c = weight_c(gamma);
  CMatrix r(4, 4);
  r(0, 0) = a;
  r(1, 1) = b;
  r(1, 2) = c;
  r(2, 1) = c;
  r(2, 2) = b;
  r(3, 3) = a;
  return r;
}

CMatrix k_matrix(Cx lambda, Cx h) {
  CMatrix k(2, 2);
  k(0, 0) = kappa_plus(lambda, h);
  k(1, 1) = kappa_minus(lambda, h);
  return k;
}

QuantumGroupRep uq_sl2_generators(Cx q) {
  QuantumGroupRep rep;
  rep.k = CMatrix(2, 2);
  rep.k(0, 0) = q;
  rep.k(1, 1) = Cx(1.0, 0.0) / q;
  rep.k_half = CMatrix(2, 2);
  const Cx qh = std::sqrt(q);
  rep.k_half(0, 0) = qh;
  rep.k_half(1, 1) = Cx(1.0, 0.0) / qh;
  rep.x_plus = CMatrix(2, 2);
  rep.x_plus(0, 1) = Cx(1.0, 0.0);
  rep.x_minus = CMatrix(2, 2);
  rep.x_minus(1, 0) = Cx(1.0, 0.0);
  return rep;
}

namespace {

// single-site blocks of the vertex matrix at argument z
BlockSet site_blocks(Cx z, Cx gamma) {
  const Cx a = weight_a(z, gamma), b = weight_b(z), c = weight_c(gamma);
  BlockSet s{CMatrix(2, 2), CMatrix(2, 2), CMatrix(2, 2), CMatrix(2, 2)};
  s.a(0, 0) = a;
  s.a(1, 1) = b;
  s.b(1, 0) = c;
  s.c(0, 1) = c;
  s.d(0, 0) = b;
  s.d(1, 1) = a;
  return s;
}

}  // namespace

BlockSet monodromy(const ModelParams& params, Cx lambda, bool barred) {
  params.validate();
  BlockSet acc{CMatrix::identity(1), CMatrix(1, 1), CMatrix(1, 1),
               CMatrix::identity(1)};
  if (!barred) {
    // product ordered site L .. site 1; the newly absorbed site is the more
    // significant tensor factor
    for (std::size_t j = params.L; j-- > 0;) {
      const BlockSet s = site_blocks(lambda - params.mu[j], params.gamma);
      BlockSet next;
      next.a = kron(s.a, acc.a) + kron(s.c, acc.b);
      next.b = kron(s.b, acc.a) + kron(s.d, acc.b);
      next.c = kron(s.a, acc.c) + kron(s.c, acc.d);
      next.d = kron(s.b, acc.c) + kron(s.d, acc.d);
      acc = std::move(next);
    }
  } else {
    // product ordered site 1 .. site L; the new site is the less significant
    // factor
    for (std::size_t j = 0; j < params.L; ++j) {
      const BlockSet s = site_blocks(lambda + params.mu[j], params.gamma);
      BlockSet next;
      next.a = kron(acc.a, s.a) + kron(acc.b, s.c);
      next.b = kron(acc.a, s.b) + kron(acc.b, s.d);
      next.c = kron(acc.c, s.a) + kron(acc.d, s.c);
      next.d = kron(acc.c, s.b) + kron(acc.d, s.d);
      acc = std::move(next);
    }
  }
  return acc;
}

DoubleRowOps double_row(const ModelParams& params, Cx lambda) {
  const BlockSet t = monodromy(params, lambda, false);
  const BlockSet tb = monodromy(params, lambda, true);
  const Cx kp = kappa_plus(lambda, params.h);
  const Cx km = kappa_minus(lambda, params.h);

  DoubleRowOps out;
  out.blocks.a = kp * (t.a * tb.a) + km * (t.b * tb.c);
  out.blocks.b = kp * (t.a * tb.b) + km * (t.b * tb.d);
  out.blocks.c = kp * (t.c * tb.a) + km * (t.d * tb.c);
  out.blocks.d = kp * (t.c * tb.b) + km * (t.d * tb.d);

  const Cx shift = weight_c(params.gamma) /
                   guarded(weight_a(2.0 * lambda, params.gamma), "a(2 lambda)");
  out.dtilde = out.blocks.d - shift * out.blocks.a;
  return out;
}

CMatrix b_operator(const ModelParams& params, Cx lambda) {
  const BlockSet t = monodromy(params, lambda, false);
  const BlockSet tb = monodromy(params, lambda, true);
  return kappa_plus(lambda, params.h) * (t.a * tb.b) +
         kappa_minus(lambda, params.h) * (t.b * tb.d);
}

CVector vacuum(std::size_t L) {
  CVector v(std::size_t(1) << L, Cx(0.0, 0.0));
  v[0] = Cx(1.0, 0.0);
  return v;
}

CVector dual_vacuum(std::size_t L) {
  CVector v(std::size_t(1) << L, Cx(0.0, 0.0));
  v.back() = Cx(1.0, 0.0);
  return v;
}

CMatrix embed_two_leg(const CMatrix& op4, std::size_t leg_i, std::size_t leg_j,
                      std::size_t legs) {
  if (op4.rows() != 4 || op4.cols() != 4) {
    throw DimensionError("embed_two_leg expects a 4x4 operator");
  }
  if (leg_i >= legs || leg_j >= legs || leg_i == leg_j) {
    throw DimensionError("invalid leg indices in embed_two_leg");
  }
  const std::size_t dim = std::size_t(1) << legs;
  CMatrix out(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t t = 0; t < dim; ++t) {
      bool other_equal = true;
      for (std::size_t k = 0; k < legs; ++k) {
        if (k == leg_i || k == leg_j) continue;
        const std::size_t shift = legs - 1 - k;
        if (((s >> shift) & 1u) != ((t >> shift) & 1u)) {
          other_equal = false;
          break;
        }
      }
      if (!other_equal) continue;
      const std::size_t si = (s >> (legs - 1 - leg_i)) & 1u;
      const std::size_t sj = (s >> (legs - 1 - leg_j)) & 1u;
      const std::size_t ti = (t >> (legs - 1 - leg_i)) & 1u;
      const std::size_t tj = (t >> (legs - 1 - leg_j)) & 1u;
      out(s, t) = op4(2 * si + sj, 2 * ti + tj);
    }
  }
  return out;
}

double ybe_residual(Cx lambda1, Cx lambda2, Cx gamma) {
  const CMatrix r12 = embed_two_leg(r_matrix(lambda1 - lambda2, gamma), 0, 1, 3);
  const CMatrix r13 = embed_two_leg(r_matrix(lambda1, gamma), 0, 2, 3);
  const CMatrix r23 = embed_two_leg(r_matrix(lambda2, gamma), 1, 2, 3);
  return pair_residual(r12 * r13 * r23, r23 * r13 * r12);
}

double unitarity_residual(Cx lambda, Cx gamma) {
  const CMatrix prod = r_matrix(lambda, gamma) * r_matrix(-lambda, gamma);
  const Cx scale = weight_a(lambda, gamma) * weight_a(-lambda, gamma);
  return pair_residual(prod, scale * CMatrix::identity(4));
}

double reflection_equation_residual(Cx lambda1, Cx lambda2, Cx gamma, Cx h) {
  const CMatrix i2 = CMatrix::identity(2);
  const CMatrix k1 = kron(k_matrix(lambda1, h), i2);
  const CMatrix k2 = kron(i2, k_matrix(lambda2, h));
  const CMatrix rm = r_matrix(lambda1 - lambda2, gamma);
  const CMatrix rp = r_matrix(lambda1 + lambda2, gamma);
  return pair_residual(rm * k1 * rp * k2, k2 * rp * k1 * rm);
}

namespace {

// double-row monodromy embedded with its auxiliary space as leg `which`
// of two auxiliary legs, quantum space appended
CMatrix embed_double_row_aux(const ModelParams& params, Cx lambda,
                             std::size_t which) {
  const DoubleRowOps ops = double_row(params, lambda);
  const CMatrix* blocks[2][2] = {{&ops.blocks.a, &ops.blocks.b},
                                 {&ops.blocks.c, &ops.blocks.d}};
  const std::size_t nq = std::size_t(1) << params.L;
  const CMatrix i2 = CMatrix::identity(2);
  CMatrix out(4 * nq, 4 * nq);
  for (std::size_t al = 0; al < 2; ++al) {
    for (std::size_t be = 0; be < 2; ++be) {
      CMatrix unit(2, 2);
      unit(al, be) = Cx(1.0, 0.0);
      const CMatrix embedded = which == 0
                                   ? kron(unit, kron(i2, *blocks[al][be]))
                                   : kron(i2, kron(unit, *blocks[al][be]));
      out += embedded;
    }
  }
  return out;
}

}  // namespace

double reflection_algebra_residual(const ModelParams& params, Cx lambda1,
                                   Cx lambda2) {
  const std::size_t nq = std::size_t(1) << params.L;
  const CMatrix iq = CMatrix::identity(nq);
  const CMatrix rm = kron(r_matrix(lambda1 - lambda2, params.gamma), iq);
  const CMatrix rp = kron(r_matrix(lambda1 + lambda2, params.gamma), iq);
  const CMatrix t1 = embed_double_row_aux(params, lambda1, 0);
  const CMatrix t2 = embed_double_row_aux(params, lambda2, 1);
  return pair_residual(rm * t1 * rp * t2, t2 * rp * t1 * rm);
}

namespace {

Cx product_over_mu(const ModelParams& params, const std::function<Cx(Cx)>& f) {
  Cx out(1.0, 0.0);
  for (const Cx m : params.mu) out *= f(m);
  return out;
}

CVector scale_vec(Cx s, CVector v) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

CVector left_action(const CVector& bra, const CMatrix& m) {
  if (bra.size() != m.rows()) {
    throw DimensionError("bra dimension mismatch in left_action");
  }
  CVector out(m.cols(), Cx(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Cx bi = bra[i];
    if (bi == Cx(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += bi * m(i, j);
  }
  return out;
}

std::vector<std::pair<std::string, double>> vacuum_weight_actions(
    const ModelParams& params, Cx lambda) {
  const Cx g = params.gamma;
  const BlockSet t = monodromy(params, lambda, false);
  const BlockSet tb = monodromy(params, lambda, true);
  const CVector v0 = vacuum(params.L);
  const CVector v0b = dual_vacuum(params.L);

  const Cx prod_a_minus =
      product_over_mu(params, [&](Cx m) { return weight_a(lambda - m, g); });
  const Cx prod_b_minus =
      product_over_mu(params, [&](Cx m) { return weight_b(lambda - m); });
  const Cx prod_a_plus =
      product_over_mu(params, [&](Cx m) { return weight_a(lambda + m, g); });
  const Cx prod_b_plus =
      product_over_mu(params, [&](Cx m) { return weight_b(lambda + m); });
  const CVector zero(v0.size(), Cx(0.0, 0.0));

  std::vector<std::pair<std::string, double>> rows;
  rows.emplace_back("a_on_vacuum",
                    pair_residual(t.a * v0, scale_vec(prod_a_minus, v0)));
  rows.emplace_back("d_on_vacuum",
                    pair_residual(t.d * v0, scale_vec(prod_b_minus, v0)));
  rows.emplace_back("c_on_vacuum", pair_residual(t.c * v0, zero));
  rows.emplace_back("abar_on_vacuum",
                    pair_residual(tb.a * v0, scale_vec(prod_a_plus, v0)));
  rows.emplace_back("dbar_on_vacuum",
                    pair_residual(tb.d * v0, scale_vec(prod_b_plus, v0)));
  rows.emplace_back("cbar_on_vacuum", pair_residual(tb.c * v0, zero));
  rows.emplace_back("dual_on_a", pair_residual(left_action(v0b, t.a),
                                               scale_vec(prod_b_minus, v0b)));
  rows.emplace_back("dual_on_d", pair_residual(left_action(v0b, t.d),
                                               scale_vec(prod_a_minus, v0b)));
  rows.emplace_back("dual_on_c", pair_residual(left_action(v0b, t.c), zero));
  rows.emplace_back("dual_on_abar", pair_residual(left_action(v0b, tb.a),
                                                  scale_vec(prod_b_plus, v0b)));
  rows.emplace_back("dual_on_dbar", pair_residual(left_action(v0b, tb.d),
                                                  scale_vec(prod_a_plus, v0b)));
  rows.emplace_back("dual_on_cbar", pair_residual(left_action(v0b, tb.c), zero));
  return rows;
}

std::vector<std::pair<std::string, double>> exchange_residuals(
    const ModelParams& params, Cx lambda1, Cx lambda2) {
  const Cx g = params.gamma;
  const Cx c = weight_c(g);
  const DoubleRowOps o1 = double_row(params, lambda1);
  const DoubleRowOps o2 = double_row(params, lambda2);
  const Cx l1 = lambda1, l2 = lambda2;

  const Cx b21 = guarded(weight_b(l2 - l1), "b(lambda_2 - lambda_1)");
  const Cx a21p = guarded(weight_a(l2 + l1, g), "a(lambda_2 + lambda_1)");
  const Cx a2l2 = guarded(weight_a(2.0 * l2, g), "a(2 lambda_2)");
  const Cx b2l1g = guarded(weight_b(2.0 * l1 + g), "b(2 lambda_1 + gamma)");
  const Cx b21g = guarded(weight_b(l2 + l1 + g), "b(lambda_1 + lambda_2 + gamma)");

  std::vector<std::pair<std::string, double>> rows;

  {
    const CMatrix lhs = o1.blocks.a * o2.blocks.b;
    const CMatrix rhs =
        (weight_a(l2 - l1, g) / b21) * (weight_b(l2 + l1) / a21p) *
            (o2.blocks.b * o1.blocks.a) -
        (weight_b(2.0 * l2) / a2l2) * (c / b21) * (o1.blocks.b * o2.blocks.a) -
        (c / a21p) * (o1.blocks.b * o2.dtilde);
    rows.emplace_back("a_past_b", pair_residual(lhs, rhs));
  }
  {
    const CMatrix lhs = o1.dtilde * o2.blocks.b;
    const CMatrix rhs =
        (weight_a(l2 + l1 + g, g) / b21g) * (weight_a(l1 - l2, g) / (-b21)) *
            (o2.blocks.b * o1.dtilde) -
        (weight_a(2.0 * l1 + g, g) / b2l1g) * (c / (-b21)) *
            (o1.blocks.b * o2.dtilde) +
        (weight_b(2.0 * l2) / a2l2) * (weight_a(2.0 * l1 + g, g) / b2l1g) *
            (c / a21p) * (o1.blocks.b * o2.blocks.a);
    rows.emplace_back("dtilde_past_b", pair_residual(lhs, rhs));
  }
  rows.emplace_back("b_commute", pair_residual(o1.blocks.b * o2.blocks.b,
                                               o2.blocks.b * o1.blocks.b));

  // same-argument relations between row and returning-row blocks
  const BlockSet t = monodromy(params, lambda1, false);
  const BlockSet tb = monodromy(params, lambda1, true);
  const Cx ratio = c / guarded(weight_a(2.0 * l1, g), "a(2 lambda_1)");
  rows.emplace_back(
      "c_past_bbar",
      pair_residual(t.c * tb.b,
                    tb.b * t.c + ratio * (tb.a * t.a - t.d * tb.d)));
  rows.emplace_back(
      "b_past_cbar",
      pair_residual(t.b * tb.c,
                    tb.c * t.b + ratio * (tb.d * t.d - t.a * tb.a)));
  return rows;
}

double double_row_composition_residual(const ModelParams& params, Cx lambda) {
  const BlockSet t = monodromy(params, lambda, false);
  const BlockSet tb = monodromy(params, lambda, true);
  const DoubleRowOps ops = double_row(params, lambda);
  const std::size_t nq = std::size_t(1) << params.L;

  auto as_aux_matrix = [&](const BlockSet& s) {
    CMatrix out(2 * nq, 2 * nq);
    const CMatrix* blocks[2][2] = {{&s.a, &s.b}, {&s.c, &s.d}};
    for (std::size_t al = 0; al < 2; ++al) {
      for (std::size_t be = 0; be < 2; ++be) {
        for (std::size_t i = 0; i < nq; ++i) {
          for (std::size_t j = 0; j < nq; ++j) {
            out(al * nq + i, be * nq + j) = (*blocks[al][be])(i, j);
          }
        }
      }
    }
    return out;
  };

  const CMatrix full = as_aux_matrix(t) *
                       kron(k_matrix(lambda, params.h), CMatrix::identity(nq)) *
                       as_aux_matrix(tb);
  const CMatrix composed = as_aux_matrix(BlockSet{
      ops.blocks.a, ops.blocks.b, ops.blocks.c, ops.blocks.d});
  return pair_residual(full, composed);
}

}  // namespace sixv
