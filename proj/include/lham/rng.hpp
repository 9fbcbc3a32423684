#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lham {

// mt19937_64's output sequence is fixed by the standard; the distributions in
// <random> are not, so sampling goes through uniform_below.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection. bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

/// Fisher-Yates with uniform_below.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace lham
