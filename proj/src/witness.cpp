#include "lham/witness.hpp"

#include <algorithm>
#include <memory>

#include "forcing.hpp"
#include "lham/error.hpp"

namespace lham {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kDegreeAtMostOne: return "degree-le-1";
    case WitnessKind::kSmallComponent: return "disconnected-component";
    case WitnessKind::kForcedContradiction: return "forced-contradiction";
  }
  return "unknown";
}

std::optional<Contradiction> local_contradiction(const Graph& g, const VertexSet& s, int cycle_length) {
  const VertexSet hood = closed_neighborhood(g, s);
  const Graph local = induced_subgraph(g, hood);
  // PropagationOptions takes a span<const bool>; vector<bool> has no contiguous storage.
  const auto open = std::make_unique<bool[]>(hood.size());
  for (std::size_t i = 0; i < hood.size(); ++i) open[i] = !s.contains(hood[i]);

  PropagationOptions options;
  options.open = std::span<const bool>(open.get(), hood.size());
  options.cycle_length = cycle_length;
  const detail::ForcingContext ctx(local, options);
  detail::ForcingState state(ctx);
  state.propagate();
  if (!state.contradiction()) return std::nullopt;
  Contradiction c = *state.contradiction();
  c.vertex = hood[static_cast<std::size_t>(c.vertex)];
  return c;
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const Graph& g, const std::vector<bool>& closed, int n_total)
      : g_(g), closed_(closed), n_total_(n_total), used_(static_cast<std::size_t>(g.n()), false),
        candidate_(static_cast<std::size_t>(g.n()), true) {}

  // Restricts every pass to vertices within distance 2 of `focus`.
  void restrict_to(std::span<const Vertex> focus) {
    std::fill(candidate_.begin(), candidate_.end(), false);
    std::vector<Vertex> layer(focus.begin(), focus.end());
    for (Vertex v : layer) candidate_[static_cast<std::size_t>(v)] = true;
    for (int step = 0; step < 2; ++step) {
      std::vector<Vertex> next;
      for (Vertex u : layer) {
        for (Vertex w : g_.neighbors(u)) {
          if (!candidate_[static_cast<std::size_t>(w)]) {
            candidate_[static_cast<std::size_t>(w)] = true;
            next.push_back(w);
          }
        }
      }
      layer = std::move(next);
    }
  }

  std::vector<Witness> run() {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (candidate_[static_cast<std::size_t>(v)] && closed_[static_cast<std::size_t>(v)] && g_.degree(v) <= 1) {
        try_add(VertexSet{v}, WitnessKind::kDegreeAtMostOne);
      }
    }
    for (const auto& component : components()) {
      if (static_cast<int>(component.size()) >= n_total_) continue;
      if (std::none_of(component.begin(), component.end(),
                       [&](Vertex v) { return candidate_[static_cast<std::size_t>(v)]; })) {
        continue;
      }
      const bool all_closed = std::all_of(component.begin(), component.end(),
                                          [&](Vertex v) { return closed_[static_cast<std::size_t>(v)]; });
      if (all_closed) try_add(VertexSet(component), WitnessKind::kSmallComponent);
    }
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!candidate_[static_cast<std::size_t>(v)] || !closed_[static_cast<std::size_t>(v)] ||
          used_[static_cast<std::size_t>(v)]) {
        continue;
      }
      for (int radius = 0; radius <= 2; ++radius) {
        const VertexSet s = ball(v, radius);
        const bool has_degree_two = std::any_of(s.begin(), s.end(), [&](Vertex u) { return g_.degree(u) == 2; });
        if (!has_degree_two || !local_contradiction(g_, s, n_total_)) continue;
        // The ball may reach into used neighbourhoods; the minimised set often does not.
        try_add(minimise(s), WitnessKind::kForcedContradiction);
        break;
      }
    }
    return std::move(found_);
  }

 private:
  bool overlaps_used(const VertexSet& hood) const {
    return std::any_of(hood.begin(), hood.end(), [&](Vertex u) { return used_[static_cast<std::size_t>(u)]; });
  }

  void try_add(const VertexSet& s, WitnessKind kind) {
    VertexSet hood = closed_neighborhood(g_, s);
    if (overlaps_used(hood)) return;
    for (Vertex u : hood) used_[static_cast<std::size_t>(u)] = true;
    found_.push_back({s, kind, std::move(hood)});
  }

  std::vector<std::vector<Vertex>> components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g_.n()), false);
    for (Vertex start = 0; start < g_.n(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::vector<Vertex> comp{start};
      seen[static_cast<std::size_t>(start)] = true;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : g_.neighbors(comp[i])) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            comp.push_back(w);
          }
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  // Closed, unused vertices within `radius` of v, walking through those only.
  VertexSet ball(Vertex v, int radius) const {
    std::vector<Vertex> members{v};
    std::vector<int> dist{0};
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (dist[i] == radius) continue;
      for (Vertex w : g_.neighbors(members[i])) {
        if (!closed_[static_cast<std::size_t>(w)] || used_[static_cast<std::size_t>(w)] ||
            std::find(members.begin(), members.end(), w) != members.end()) {
          continue;
        }
        members.push_back(w);
        dist.push_back(dist[i] + 1);
      }
    }
    return VertexSet(std::move(members));
  }

  VertexSet minimise(VertexSet s) const {
    for (std::size_t i = 0; i < s.size() && s.size() > 1;) {
      std::vector<Vertex> smaller;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != i) smaller.push_back(s[j]);
      }
      VertexSet candidate(std::move(smaller));
      if (local_contradiction(g_, candidate, n_total_)) {
        s = std::move(candidate);
      } else {
        ++i;
      }
    }
    return s;
  }

  const Graph& g_;
  const std::vector<bool>& closed_;
  int n_total_;
  std::vector<bool> used_;
  std::vector<bool> candidate_;
  std::vector<Witness> found_;
};

}  // namespace

std::vector<Witness> find_witnesses(const Graph& g) {
  const std::vector<bool> closed(static_cast<std::size_t>(g.n()), true);
  return WitnessSearch(g, closed, g.n()).run();
}

std::vector<Witness> find_witnesses_in_view(const LocalView& view, int n_total, std::span<const Vertex> focus) {
  const std::size_t n = view.global.size();
  if (view.adjacency.size() != n || view.explored.size() != n) throw InputError("local view arrays differ in size");
  int bound = 0;
  for (const auto& list : view.adjacency) bound = std::max(bound, static_cast<int>(list.size()));
  const Graph local = Graph::from_adjacency(static_cast<int>(n), bound, view.adjacency);
  WitnessSearch search(local, view.explored, n_total);
  if (!focus.empty()) {
    std::vector<Vertex> local_focus;
    for (Vertex v : focus) {
      const auto it = std::find(view.global.begin(), view.global.end(), v);
      if (it == view.global.end()) throw InputError("focus vertex " + std::to_string(v) + " is not in the view");
      local_focus.push_back(static_cast<Vertex>(it - view.global.begin()));
    }
    search.restrict_to(local_focus);
  }
  std::vector<Witness> out = search.run();
  auto to_global = [&](const VertexSet& s) {
    std::vector<Vertex> ids;
    for (Vertex v : s) ids.push_back(view.global[static_cast<std::size_t>(v)]);
    return VertexSet(std::move(ids));
  };
  for (Witness& w : out) {
    w.s = to_global(w.s);
    w.neighborhood = to_global(w.neighborhood);
  }
  return out;
}

FarnessBound farness_lower_bound(std::int64_t witness_count, std::int64_t n, int d) {
  if (witness_count < 0) throw InputError("witness count must be non-negative");
  if (n <= 0 || d <= 0) throw InputError("farness bound needs positive n and d");
  return {(witness_count + 1) / 2, Rational(witness_count, 2 * static_cast<std::int64_t>(d) * n)};
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t universe) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < universe - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<int> distance_to_hamiltonicity(const Graph& g, int d, int cap,
                                             const std::function<bool(Edge)>& may_toggle) {
  const int n = g.n();
  if (n > kDistanceVertexCap) {
    throw CapabilityError("distance_to_hamiltonicity supports at most " + std::to_string(kDistanceVertexCap) +
                          " vertices, got " + std::to_string(n));
  }
  if (cap < 0) throw InputError("modification cap must be non-negative");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!may_toggle || may_toggle(Edge(u, v))) pairs.emplace_back(u, v);
    }
  }
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (const Edge& e : g.edges()) adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;

  auto hamiltonian_after = [&](const std::vector<std::size_t>& toggles) {
    auto current = adj;
    for (std::size_t t : toggles) {
      const Edge& e = pairs[t];
      current[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
          !current[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    }
    std::vector<Edge> edges;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!current[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
        edges.emplace_back(u, v);
        if (++degree[static_cast<std::size_t>(u)] > d || ++degree[static_cast<std::size_t>(v)] > d) return false;
      }
    }
    const Graph h = Graph::from_edges(n, d, edges);
    return find_hamiltonian_cycle(h).status == SolveStatus::kCycle;
  };

  for (int k = 0; k <= cap && static_cast<std::size_t>(k) <= pairs.size(); ++k) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    do {
      if (hamiltonian_after(idx)) return k;
    } while (k > 0 && next_combination(idx, pairs.size()));
  }
  return std::nullopt;
}

}  // namespace lham
