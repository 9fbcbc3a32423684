#pragma once

#include <cstdint>
#include <string>

#include "lham/construction.hpp"
#include "lham/graph.hpp"
#include "lham/rational.hpp"

namespace lham {

/// Exact expansion ratio h(G) with the lexicographically smallest minimiser.
struct ExpansionReport {
  Rational h;
  std::int64_t cut_edges = 0;
  VertexSet witness;
};

inline constexpr int kExpansionVertexCap = 24;

/// Exhaustive over nonempty S with |S| <= n/2. Throws CapabilityError above 24 vertices
/// and InputError below 2.
ExpansionReport expansion_ratio(const Graph& g);

/// Simple d-regular graph from the configuration (pairing) model, rejecting loops and
/// multi-edges. Deterministic in `seed`. Throws InputError for odd d*n or d >= n,
/// GenerationError after the retry budget.
BaseGraph random_regular(int d, int n, std::uint64_t seed);

/// Parses c3 | k4 | k5 | petersen | complete:n | random_regular:d:n:seed | file:path.
BaseGraph make_base(const std::string& spec);

/// A base graph that passed the h >= 1 gate.
class VerifiedExpander {
 public:
  /// Throws ExpansionError when h(base) < 1.
  explicit VerifiedExpander(BaseGraph base);

  [[nodiscard]] const BaseGraph& base() const { return base_; }
  [[nodiscard]] const ExpansionReport& report() const { return report_; }

 private:
  BaseGraph base_;
  ExpansionReport report_;
};

}  // namespace lham
