#include "mwvc/random.hpp"

#include "mwvc/graph.hpp"

namespace mwvc {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  expects(bound > 0, "uniform_below: empty range");
  // Reject the low sliver that would bias r % bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace mwvc
