#pragma once

// Forced-edge propagation engine shared by the solver and the witness search.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lham/graph.hpp"
#include "lham/solver.hpp"

namespace lham::detail {

enum class EdgeStatus : std::uint8_t { kFree, kForced, kExcluded };

struct Incidence {
  Vertex other;
  int edge;
};

/// Immutable edge indexing of a graph plus the rule configuration.
struct ForcingContext {
  ForcingContext(const Graph& g, const PropagationOptions& options);

  int n = 0;
  int cycle_length = 0;
  bool exclude_subtours = false;
  std::vector<Edge> edges;
  std::vector<std::vector<Incidence>> incident;  // sorted by neighbour id
  std::vector<bool> open;

  [[nodiscard]] std::optional<int> edge_between(Vertex a, Vertex b) const;
};

/// Mutable search state; cheap to copy for branching.
class ForcingState {
 public:
  explicit ForcingState(const ForcingContext& ctx);

  /// Runs every rule to a fixed point. Returns false on contradiction.
  bool propagate();
  bool force(int edge);
  bool exclude(int edge);

  [[nodiscard]] bool failed() const { return contradiction_.has_value(); }
  [[nodiscard]] const std::optional<Contradiction>& contradiction() const { return contradiction_; }
  [[nodiscard]] bool closed() const { return closed_; }
  [[nodiscard]] EdgeStatus status(int edge) const { return status_[static_cast<std::size_t>(edge)]; }
  [[nodiscard]] int forced_degree(Vertex v) const { return forced_deg_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int available_degree(Vertex v) const { return avail_deg_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] const ForcingContext& context() const { return *ctx_; }

  /// False when the non-excluded edges leave the graph disconnected or with a
  /// cut vertex (n >= 3).
  [[nodiscard]] bool available_graph_biconnected() const;

  /// Follows forced edges from vertex 0; only meaningful once closed().
  [[nodiscard]] CycleCertificate forced_cycle() const;

  [[nodiscard]] ForcedState snapshot() const;

 private:
  void fail(ContradictionKind kind, Vertex v);
  void touch(Vertex v);

  const ForcingContext* ctx_;
  std::vector<EdgeStatus> status_;
  std::vector<int> forced_deg_;
  std::vector<int> avail_deg_;
  std::vector<Vertex> end_of_;   // other end of the forced path, for path endpoints
  std::vector<int> path_len_;    // edges on that path, valid at endpoints
  std::vector<Vertex> pending_;
  std::vector<bool> queued_;
  std::optional<Contradiction> contradiction_;
  bool closed_ = false;
};

}  // namespace lham::detail
