#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lham/graph.hpp"

namespace lham {

enum class ContradictionKind {
  kOverForced,  // a vertex with three or more forced edges
  kShortCycle,  // forced edges close a cycle shorter than n
  kStarved,     // a vertex with fewer than two non-excluded edges
};

std::string to_string(ContradictionKind k);

struct Contradiction {
  ContradictionKind kind;
  Vertex vertex;
};

/// Fixed point of the sound closure rules on a graph.
struct ForcedState {
  std::vector<Edge> forced;
  std::vector<Edge> excluded;
  std::optional<Contradiction> contradiction;
};

struct PropagationOptions {
  /// Vertices whose edge set may extend beyond the graph (boundary of a local
  /// view). The degree-two and starvation rules skip them.
  std::span<const bool> open = {};
  /// Length of a Hamiltonian cycle; defaults to g.n(). Local views pass the
  /// order of the whole graph.
  int cycle_length = 0;
  /// Also exclude any free edge joining the two ends of a forced path that is
  /// too short to close. Sound, not part of the base rule set.
  bool exclude_subtours = false;
};

/// Rules: (a) a vertex with exactly two available edges forces both; (b) a vertex
/// with two forced edges excludes the rest; (c) forced edges closing a cycle of
/// length < n contradict; (d) three forced edges at a vertex contradict; (e) fewer
/// than two available edges contradict.
ForcedState propagate_forced(const Graph& g, const PropagationOptions& options = {});

enum class SolveStatus { kCycle, kNonHamiltonian, kBudgetExceeded };

std::string to_string(SolveStatus s);

struct SolveBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kNonHamiltonian;
  std::optional<CycleCertificate> cycle;
  std::uint64_t nodes_explored = 0;
  std::int64_t wall_ms = 0;
};

/// Exact backtracking with forced-edge propagation, subtour exclusion and a
/// 2-connectivity check of the available edges at every node. Branches on the
/// lowest-id unsaturated vertex with the fewest available edges, edges in
/// neighbour-id order. Graphs with fewer than three vertices are non-Hamiltonian.
SolveResult find_hamiltonian_cycle(const Graph& g, const SolveBudget& budget = {});

/// {"status": ..., "cycle": [...], "nodes_explored": int, "wall_ms": int}
nlohmann::json solve_result_to_json(const SolveResult& r);

}  // namespace lham
