#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lham/graph.hpp"
#include "lham/rational.hpp"
#include "lham/solver.hpp"

namespace lham {

enum class WitnessKind {
  kDegreeAtMostOne,       // a vertex of degree <= 1
  kSmallComponent,        // a connected component with fewer than n vertices
  kForcedContradiction,   // propagation inside N[S] alone reaches a contradiction
};

std::string to_string(WitnessKind k);

/// A vertex set whose closed neighbourhood rules out every Hamiltonian graph of
/// the same order containing it with S pinned.
struct Witness {
  VertexSet s;
  WitnessKind kind = WitnessKind::kDegreeAtMostOne;
  VertexSet neighborhood;  // closed
};

/// Propagation restricted to G[N[S]]: vertices of N[S] \ S are open, so only
/// edges that every Hamiltonian completion must share are reasoned about.
/// `cycle_length` is the order of the whole graph.
std::optional<Contradiction> local_contradiction(const Graph& g, const VertexSet& s, int cycle_length);

/// Greedy maximal list of sound witnesses with pairwise disjoint closed
/// neighbourhoods: degree <= 1 vertices first, then small components, then
/// forced contradictions on BFS balls of radius 0..2 (each minimised by
/// dropping vertices in id order). Sound, not complete.
std::vector<Witness> find_witnesses(const Graph& g);

/// The part of a graph a tester has seen. Explored vertices have their full
/// adjacency; the others appear only as neighbours of explored ones.
struct LocalView {
  std::vector<Vertex> global;              // local id -> id in the full graph
  std::vector<std::vector<Vertex>> adjacency;  // local ids, symmetric
  std::vector<bool> explored;
};

/// Same search, with S restricted to explored vertices; witnesses are reported
/// in global ids. `n_total` is the order of the full graph. A nonempty `focus`
/// (global ids) limits the search to witnesses within distance 2 of it, which
/// is exact for re-checking a grown view whose previous search was empty.
std::vector<Witness> find_witnesses_in_view(const LocalView& view, int n_total,
                                            std::span<const Vertex> focus = {});

struct FarnessBound {
  std::int64_t min_modifications = 0;  // ceil(w/2)
  Rational epsilon;                    // w / (2 d n)
};

/// w witnesses with disjoint neighbourhoods each need a modified edge touching
/// them, and one edge touches at most two neighbourhoods.
FarnessBound farness_lower_bound(std::int64_t witness_count, std::int64_t n, int d);

inline constexpr int kDistanceVertexCap = 10;

/// Smallest number of edge insertions/deletions making `g` Hamiltonian with
/// every degree <= d afterwards, or nullopt if more than `cap` are needed.
/// Only pairs accepted by `may_toggle` are modified (all pairs when empty).
/// Throws CapabilityError above 10 vertices.
std::optional<int> distance_to_hamiltonicity(const Graph& g, int d, int cap,
                                             const std::function<bool(Edge)>& may_toggle = {});

}  // namespace lham
