#pragma once

#include <cstddef>
#include <functional>

namespace sixv {

// chunked loop over [0, n); results must be written to disjoint slots so the
// outcome is independent of thread count
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

// SIXV_PARALLELISM from the environment, else 1
unsigned default_parallelism();

}  // namespace sixv
