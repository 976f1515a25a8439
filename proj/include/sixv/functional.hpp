#pragma once

#include <vector>

#include "sixv/model.hpp"
#include "sixv/report.hpp"

namespace sixv {

// scalar coefficients of the linear relation
// m0 * Z(lambda) + sum_i mi * Z(lambda with lambda_i -> lambda_0) = 0
struct FunctionalCoefficients {
  Cx m0;
  std::vector<Cx> mi;
};
FunctionalCoefficients coefficients(const ModelParams& params, Cx lambda0,
                                    const SpectralPoint& point);

// |sum of terms| / sum |terms| of the relation above
double equation_residual(const ModelParams& params, Cx lambda0,
                         const SpectralPoint& point);

// same relation with the L+1 values (lambda_0, lambda_1, ..., lambda_L)
// redistributed over the roles; roles must be a permutation of 0..L, entry r
// naming which input value plays role r
double permuted_equation_residual(const ModelParams& params, Cx lambda0,
                                  const SpectralPoint& point,
                                  const std::vector<std::size_t>& roles);

// first-order pole data of the coefficients at lambda_0 -> lambda_k, probed a
// distance eps from the pole, plus the closed form the residue must match
struct ResiduePairing {
  Cx m0_residue;
  Cx mk_residue;
  Cx closed_form;
};
ResiduePairing residue_pairing(const ModelParams& params,
                               const SpectralPoint& point, std::size_t k,
                               double eps = 1e-6);

// value of the reduced function obtained at lambda_1 = mu_1 - gamma
Cx v_function(const ModelParams& params, const std::vector<Cx>& rest);

// splits Z into the reduced function: main identity plus, for L >= 3, the
// exchange symmetry of the reduced arguments
VerificationReport v_split_check(const ModelParams& params,
                                 const SpectralPoint& point);

}  // namespace sixv
