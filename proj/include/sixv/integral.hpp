#pragma once

#include <vector>

#include "sixv/interpolate.hpp"
#include "sixv/model.hpp"

namespace sixv {

// integrand numerator evaluated at the w tuple; the denominators that the
// residue evaluation cancels are removed analytically, and the squared
// difference factors are folded in so coincident w give an exact zero
Cx h_function(const ModelParams& params, const std::vector<Cx>& w);

// partition function as the closed residue sum over all assignments of the
// lambda tuple to the integration variables
Cx residue_sum(const ModelParams& params, const SpectralPoint& point);

// right-hand side of the one-variable reduction of h_function; the ratio
// h_function / h_recursion_rhs is a w-independent constant, which is what
// callers should test
Cx h_recursion_rhs(const ModelParams& params, const std::vector<Cx>& w);

enum class ZPath { Oracle, ResidueSum };

// extrapolates Z at coinciding arguments lambda, mu_hom from an epsilon
// ladder of separated evaluations; variant selects the offset phases so
// independence from the direction pattern can be tested
Extrapolated homogeneous_limit(const ModelParams& params, Cx lambda, Cx mu_hom,
                               const std::vector<double>& eps_ladder,
                               ZPath path = ZPath::Oracle,
                               unsigned variant = 0);

}  // namespace sixv
