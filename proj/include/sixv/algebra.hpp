#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sixv/cmatrix.hpp"
#include "sixv/model.hpp"

namespace sixv {

// 4x4 vertex matrix in the basis (00, 01, 10, 11)
CMatrix r_matrix(Cx lambda, Cx gamma);

// diagonal boundary matrix diag(sinh(h+lambda), sinh(h-lambda))
CMatrix k_matrix(Cx lambda, Cx h);

// two-dimensional representation K = diag(q, 1/q), raising/lowering matrices
struct QuantumGroupRep {
  CMatrix k;
  CMatrix k_half;  // diag(q^{1/2}, q^{-1/2}), principal root
  CMatrix x_plus;
  CMatrix x_minus;
};
QuantumGroupRep uq_sl2_generators(Cx q);

// row transfer blocks over the auxiliary space; each entry acts on the
// 2^L quantum space
struct BlockSet {
  CMatrix a, b, c, d;
};

// barred = false: product ordered site L down to site 1, arguments
// lambda - mu_j; barred = true: site 1 up to site L, arguments lambda + mu_j
BlockSet monodromy(const ModelParams& params, Cx lambda, bool barred);

// boundary-dressed double-row blocks plus the shifted combination
// dtilde = d - (c/a(2 lambda)) a; building dtilde divides by a(2 lambda)
struct DoubleRowOps {
  BlockSet blocks;
  CMatrix dtilde;
};
DoubleRowOps double_row(const ModelParams& params, Cx lambda);

// creation block of the double-row family alone; never divides, so it is
// safe on the a(2 lambda) = 0 manifold
CMatrix b_operator(const ModelParams& params, Cx lambda);

CVector vacuum(std::size_t L);       // all spins up
CVector dual_vacuum(std::size_t L);  // all spins down

// row vector bra * m under the bilinear pairing
CVector left_action(const CVector& bra, const CMatrix& m);

// embed a two-leg operator on legs (i, j) of `legs` two-dimensional legs
CMatrix embed_two_leg(const CMatrix& op4, std::size_t leg_i, std::size_t leg_j,
                      std::size_t legs);

double ybe_residual(Cx lambda1, Cx lambda2, Cx gamma);
double unitarity_residual(Cx lambda, Cx gamma);
double reflection_equation_residual(Cx lambda1, Cx lambda2, Cx gamma, Cx h);

// full exchange relation of two double-row monodromies on aux space
// C^2 x C^2 x (C^2)^L
double reflection_algebra_residual(const ModelParams& params, Cx lambda1,
                                   Cx lambda2);

// vacuum / dual-vacuum actions of all row-transfer blocks against their
// product formulas; returns (label, residual) pairs
std::vector<std::pair<std::string, double>> vacuum_weight_actions(
    const ModelParams& params, Cx lambda);

// the five block exchange identities used by the recursion argument
std::vector<std::pair<std::string, double>> exchange_residuals(
    const ModelParams& params, Cx lambda1, Cx lambda2);

// double-row blocks against the aux-embedded product tau K taubar
double double_row_composition_residual(const ModelParams& params, Cx lambda);

}  // namespace sixv
