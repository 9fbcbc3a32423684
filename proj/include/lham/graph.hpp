#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lham {

using Vertex = int;

/// Undirected edge, normalised so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed edge of a doubled graph.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  [[nodiscard]] Arc reversed() const { return {head, tail}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Sorted set of vertex ids without duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  /// Sorts and deduplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  [[nodiscard]] std::span<const Vertex> ids() const { return ids_; }
  [[nodiscard]] auto begin() const { return ids_.begin(); }
  [[nodiscard]] auto end() const { return ids_.end(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return ids_[i]; }

  /// Throws InputError unless every id lies in [0, n).
  void check_range(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Simple undirected graph with a degree bound and an explicit neighbour order.
///
/// The order of each adjacency list is part of the value seen by an oracle:
/// `operator==` compares edge sets only, `identical` also compares orderings.
class Graph {
 public:
  Graph() = default;

  /// Validates symmetry, simplicity and the degree bound. Keeps the given order.
  static Graph from_adjacency(int n, int degree_bound, std::vector<std::vector<Vertex>> adjacency);
  /// Builds adjacency lists sorted by neighbour id. Rejects loops and duplicates.
  static Graph from_edges(int n, int degree_bound, std::span<const Edge> edges);

  [[nodiscard]] int n() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] int degree_bound() const { return degree_bound_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const;
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] int min_degree() const;
  [[nodiscard]] std::size_t edge_count() const;
  /// All edges with u < v, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }

  /// Appends the new edges at the tail of both endpoints' lists; untouched
  /// vertices keep byte-identical lists.
  [[nodiscard]] Graph with_added_edges(std::span<const Edge> extra, int degree_bound) const;
  /// Removes an existing edge, keeping the relative order of the others.
  [[nodiscard]] Graph with_removed_edge(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int degree_bound_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

/// Equal edge sets, degree bounds and adjacency orderings.
bool identical(const Graph& a, const Graph& b);

/// Directed graph: used for the symmetric double of a base graph.
struct DiGraph {
  int n = 0;
  std::vector<Arc> arcs;  // sorted

  /// Replaces every edge {u,v} by (u,v) and (v,u).
  static DiGraph double_of(const Graph& g);
  [[nodiscard]] std::vector<Arc> in_arcs(Vertex v) const;
  [[nodiscard]] std::vector<Arc> out_arcs(Vertex v) const;
};

/// An explicit vertex sequence claimed to be a Hamiltonian cycle.
struct CycleCertificate {
  std::vector<Vertex> order;
  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

enum class CycleDefect {
  kNone,
  kTooShort,         // fewer than three vertices
  kWrongLength,      // length differs from n
  kOutOfRange,       // id outside [0, n)
  kRepeatedVertex,
  kMissingEdge,      // consecutive pair (or closing pair) not adjacent
};

struct CycleCheck {
  bool ok = false;
  CycleDefect defect = CycleDefect::kNone;
  std::size_t position = 0;  // index of the offending entry

  explicit operator bool() const { return ok; }
};

std::string to_string(CycleDefect d);

/// S together with every neighbour of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// G[S] relabelled to [0, |S|) in the sorted order of S; relative neighbour order kept.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

inline constexpr int kIsomorphismVertexCap = 64;

/// Backtracking isomorphism search honouring pinned (u in g -> t in h) pairs.
/// Returns mapping[u] = image of u. Throws CapabilityError above 64 vertices.
std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g, const Graph& h,
                                                  std::span<const std::pair<Vertex, Vertex>> pinned = {});

/// Checks that `c` visits every vertex of `g` once along existing edges and closes.
CycleCheck verify_cycle_certificate(const Graph& g, const CycleCertificate& c);

/// True iff `p` is a contiguous run of `c`, forwards or reversed, with wrap-around.
bool contains_subpath(const CycleCertificate& c, std::span<const Vertex> p);

/// Position lookup for repeated subpath queries against one cycle.
class CycleIndex {
 public:
  explicit CycleIndex(const CycleCertificate& c);
  [[nodiscard]] bool contains_subpath(std::span<const Vertex> p) const;
  [[nodiscard]] bool contains_subpath(std::initializer_list<Vertex> p) const {
    return contains_subpath(std::span<const Vertex>(p.begin(), p.size()));
  }

 private:
  std::vector<Vertex> order_;
  std::vector<long> position_;  // -1 when absent
};

}  // namespace lham
