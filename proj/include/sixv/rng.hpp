#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "sixv/cmatrix.hpp"
#include "sixv/errors.hpp"

namespace sixv {

// splitmix-style mix so (seed, stream, draw) label independent generators;
// keeps every check reproducible regardless of evaluation order
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t draw = 0) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1) +
                    0xbf58476d1ce4e5b9ULL * (draw + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }

  double sign() { return eng_() & 1u ? 1.0 : -1.0; }

  // re, im independently drawn with |part| in [lo, hi]; keeps draws away
  // from the coordinate axes where hyperbolic factors degenerate
  Cx signed_complex(double lo = 0.1, double hi = 1.0) {
    return Cx(sign() * uniform(lo, hi), sign() * uniform(lo, hi));
  }

  Cx annulus(double radius_lo, double radius_hi) {
    const double r = uniform(radius_lo, radius_hi);
    const double t = uniform(0.0, 6.283185307179586);
    return r * Cx(std::cos(t), std::sin(t));
  }

  Cx normal_complex() {
    std::normal_distribution<double> dist(0.0, 1.0);
    return Cx(dist(eng_), dist(eng_));
  }

 private:
  std::mt19937_64 eng_;
};

// retry loop for rejection sampling; attempt returns nullopt to redraw
template <typename F>
auto rejection_draw(F&& attempt, int max_tries = 500) {
  for (int k = 0; k < max_tries; ++k) {
    if (auto v = attempt()) return *v;
  }
  throw BudgetError("rejection sampling exhausted its retry budget");
}

}  // namespace sixv
