#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwvc/graph.hpp"

namespace mwvc {

/// Rule assigning weights to vertices that carry none in their input.
struct WeightScheme {
  enum class Kind {
    kConstant,            // every vertex gets `value`
    kUniformRandom,       // seeded, uniform in [low, high]
    kIndexMod200,         // (i + 1) mod 200, i the 1-based vertex index
    kIndexMod200ZeroBased // (i + 1) mod 200, i the 0-based vertex index
  };

  Kind kind = Kind::kConstant;
  Weight value = 1;
  Weight low = 0;
  Weight high = 0;
  std::uint64_t seed = 0;

  static WeightScheme constant(Weight w) { return {Kind::kConstant, w}; }
  static WeightScheme uniform_random(Weight low, Weight high, std::uint64_t seed) {
    return {Kind::kUniformRandom, 0, low, high, seed};
  }
  static WeightScheme index_mod_200() { return {Kind::kIndexMod200}; }
  static WeightScheme index_mod_200_zero_based() { return {Kind::kIndexMod200ZeroBased}; }

  std::vector<Weight> assign(std::size_t n) const;
  std::string describe() const;
};

/// Accepts "i-mod-200", "i-mod-200-zero-based", "uniform" (all 1),
/// "uniform:K" and "random:LOW:HIGH[:SEED]". Anything else yields nullopt.
std::optional<WeightScheme> parse_weight_scheme(std::string_view text);

}  // namespace mwvc
