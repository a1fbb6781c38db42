#include "mwvc/weights.hpp"

#include <charconv>

#include "mwvc/random.hpp"

namespace mwvc {

std::vector<Weight> WeightScheme::assign(std::size_t n) const {
  std::vector<Weight> w(n);
  switch (kind) {
    case Kind::kConstant:
      std::fill(w.begin(), w.end(), value);
      break;
    case Kind::kUniformRandom: {
      expects(low <= high, "WeightScheme: empty random range");
      std::mt19937_64 rng(seed);
      const auto span = static_cast<std::uint64_t>(high - low) + 1;
      for (auto& x : w) x = low + static_cast<Weight>(uniform_below(rng, span));
      break;
    }
    case Kind::kIndexMod200:
      for (std::size_t v = 0; v < n; ++v) w[v] = static_cast<Weight>((v + 2) % 200);
      break;
    case Kind::kIndexMod200ZeroBased:
      for (std::size_t v = 0; v < n; ++v) w[v] = static_cast<Weight>((v + 1) % 200);
      break;
  }
  return w;
}

std::string WeightScheme::describe() const {
  switch (kind) {
    case Kind::kConstant: return "uniform:" + std::to_string(value);
    case Kind::kUniformRandom:
      return "random:" + std::to_string(low) + ":" + std::to_string(high) + ":" +
             std::to_string(seed);
    case Kind::kIndexMod200: return "i-mod-200";
    case Kind::kIndexMod200ZeroBased: return "i-mod-200-zero-based";
  }
  return "?";
}

namespace {

template <class T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

std::optional<WeightScheme> parse_weight_scheme(std::string_view text) {
  if (text == "i-mod-200") return WeightScheme::index_mod_200();
  if (text == "i-mod-200-zero-based") return WeightScheme::index_mod_200_zero_based();
  if (text == "uniform") return WeightScheme::constant(1);
  if (text.starts_with("uniform:")) {
    const auto w = parse_number<Weight>(text.substr(8));
    if (!w || *w < 0 || *w > kMaxVertexWeight) return std::nullopt;
    return WeightScheme::constant(*w);
  }
  if (text.starts_with("random:")) {
    std::vector<std::string_view> parts;
    std::string_view rest = text.substr(7);
    for (;;) {
      const auto colon = rest.find(':');
      parts.push_back(rest.substr(0, colon));
      if (colon == std::string_view::npos) break;
      rest.remove_prefix(colon + 1);
    }
    if (parts.size() < 2 || parts.size() > 3) return std::nullopt;
    const auto low = parse_number<Weight>(parts[0]);
    const auto high = parse_number<Weight>(parts[1]);
    std::uint64_t seed = 0;
    if (parts.size() == 3) {
      const auto s = parse_number<std::uint64_t>(parts[2]);
      if (!s) return std::nullopt;
      seed = *s;
    }
    if (!low || !high || *low < 0 || *low > *high || *high > kMaxVertexWeight)
      return std::nullopt;
    return WeightScheme::uniform_random(*low, *high, seed);
  }
  return std::nullopt;
}

}  // namespace mwvc
