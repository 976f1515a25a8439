#include "sixv/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sixv/errors.hpp"

namespace sixv {

Cx guarded(Cx value, const char* manifold) {
  const double mag = std::abs(value);
  if (mag < kDeltaSing) throw SingularManifoldError(manifold, mag);
  return value;
}

void ModelParams::validate() const {
  if (L < 1 || L > kMaxChainLength) {
    throw DimensionError("chain length L must lie in [1, " +
                         std::to_string(kMaxChainLength) + "], got " +
                         std::to_string(L));
  }
  if (mu.size() != L) {
    throw DimensionError("mu must have exactly L = " + std::to_string(L) +
                         " entries, got " + std::to_string(mu.size()));
  }
}

void validate_point(const ModelParams& params, const SpectralPoint& point) {
  params.validate();
  if (point.lambda.size() != params.L) {
    throw DimensionError("lambda must have exactly L = " +
                         std::to_string(params.L) + " entries, got " +
                         std::to_string(point.lambda.size()));
  }
}

Cx canonical_sum(std::vector<Cx> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Cx& a, const Cx& b) {
    return std::abs(a) > std::abs(b);
  });
  KahanAccumulator acc;
  for (const Cx& t : terms) acc.add(t);
  return acc.sum;
}

double sum_residual(const std::vector<Cx>& terms) {
  double scale = 0.0;
  for (const Cx& t : terms) scale += std::abs(t);
  const Cx total = canonical_sum(terms);
  if (scale < 1e-14) return std::abs(total);
  return std::abs(total) / scale;
}

}  // namespace sixv
