#pragma once

#include <vector>

#include "sixv/cmatrix.hpp"
#include "sixv/model.hpp"
#include "sixv/rng.hpp"

namespace sixv {

// dense multivariate coefficient tensor, row-major with the last axis
// contiguous; shape()[ax] counts coefficients (degree + 1) along axis ax
class PolyRep {
 public:
  PolyRep() = default;
  explicit PolyRep(std::vector<std::size_t> shape);

  std::size_t nvars() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t flat_size() const { return coeffs_.size(); }
  std::vector<Cx>& coeffs() { return coeffs_; }
  const std::vector<Cx>& coeffs() const { return coeffs_; }

  Cx eval(const std::vector<Cx>& xs) const;
  PolyRep derivative(std::size_t axis) const;
  // coefficient of the top power along `axis`, one variable fewer
  PolyRep top_slice(std::size_t axis) const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<Cx> coeffs_;
};

inline constexpr std::size_t kDefaultGridBudget = 5;

// full coefficient tensor of the rescaled partition function, degree 2L per
// variable, from a tensor grid of circle nodes with per-axis fits; refuses
// L > max_budget since the grid has (2L+1)^L points
PolyRep interpolate_zbar(const ModelParams& params, double node_radius = 1.0,
                         unsigned threads = 1,
                         std::size_t max_budget = kDefaultGridBudget);

PolyRep random_polyrep(std::size_t nvars, std::size_t per_axis, Rng& rng);

// substitution operator evaluated both as direct argument replacement and as
// the truncated derivative series; callers compare the two
struct SubstitutionPair {
  Cx substitution;
  Cx differential;
};
SubstitutionPair apply_substitution(const PolyRep& poly, std::size_t i, Cx x0,
                                    const std::vector<Cx>& xs);

// pointwise residual of the rescaled difference operator applied to poly at
// probe xs with deformation argument x0
double lbar_residual(const ModelParams& params, Cx x0,
                     const std::vector<Cx>& xs, const PolyRep& poly);

// normalised magnitudes of the x0-polynomial coefficients of the
// pole-cleared operator applied to poly; extra_nodes adds fit head room so
// over-degree coefficients are probed as well
std::vector<double> extract_omegas(const ModelParams& params,
                                   const PolyRep& poly,
                                   const std::vector<Cx>& xs,
                                   double fit_radius = 1.1,
                                   std::size_t extra_nodes = 0);

// residual of the top-order coefficient identity: potential term plus the
// weighted 2L-th derivatives
double omega_top_residual(const ModelParams& params, const PolyRep& poly,
                          const std::vector<Cx>& xs);

// normalised contour residue of the un-cleared operator around
// lambda_0 = center; vanishing distinguishes removable from genuine poles
double pole_loop_residue(const ModelParams& params, const PolyRep& poly,
                         const std::vector<Cx>& xs, Cx center,
                         double eps = 1e-3, std::size_t samples = 32);

// first-order companion system: chain rows hold exactly by construction,
// the closing row carries the top-order identity
struct ReductionOutcome {
  double first_row = 0.0;
  double chain_rows = 0.0;
  std::size_t length = 0;
};
ReductionOutcome reduction_system_check(
    const ModelParams& params, const PolyRep& poly,
    const std::vector<std::vector<Cx>>& probes);

}  // namespace sixv
