#pragma once

#include <cstddef>
#include <vector>

#include "sixv/cmatrix.hpp"

namespace sixv {

// proximity threshold for singular-manifold guards
inline constexpr double kDeltaSing = 1e-8;

// hard cap on chain length; 2^L state vectors stay desk sized
inline constexpr std::size_t kMaxChainLength = 8;

// bulk vertex weights at spectral parameter lambda
inline Cx weight_a(Cx lambda, Cx gamma) { return std::sinh(lambda + gamma); }
inline Cx weight_b(Cx lambda) { return std::sinh(lambda); }
inline Cx weight_c(Cx gamma) { return std::sinh(gamma); }

// boundary weights of the diagonal reflection matrix
inline Cx kappa_plus(Cx lambda, Cx h) { return std::sinh(h + lambda); }
inline Cx kappa_minus(Cx lambda, Cx h) { return std::sinh(h - lambda); }

// throws SingularManifoldError when |value| < kDeltaSing
Cx guarded(Cx value, const char* manifold);

struct ModelParams {
  std::size_t L = 0;
  Cx gamma;
  Cx h;
  std::vector<Cx> mu;  // inhomogeneities, one per site

  // checks structural invariants: 1 <= L <= kMaxChainLength, mu.size() == L
  void validate() const;
};

struct SpectralPoint {
  std::vector<Cx> lambda;  // one parameter per double row
};

// requires point.lambda.size() == params.L
void validate_point(const ModelParams& params, const SpectralPoint& point);

// compensated accumulation; used through canonical_sum so reductions are
// bitwise reproducible regardless of thread count
struct KahanAccumulator {
  Cx sum{0.0, 0.0};
  Cx compensation{0.0, 0.0};
  void add(Cx value) {
    const Cx y = value - compensation;
    const Cx t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
};

// stable sort by descending magnitude (ties keep input order), then Kahan
// accumulate; one canonical evaluation order for every term set
Cx canonical_sum(std::vector<Cx> terms);

// |sum(terms)| / sum(|terms|), with absolute fallback when all terms vanish
double sum_residual(const std::vector<Cx>& terms);

}  // namespace sixv
