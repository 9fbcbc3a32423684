#include "lham/graph.hpp"

#include <algorithm>
#include <numeric>

#include "lham/error.hpp"

namespace lham {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

void VertexSet::check_range(int n) const {
  if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= n)) {
    throw InputError("vertex id out of range [0, " + std::to_string(n) + ")");
  }
}

Graph Graph::from_adjacency(int n, int degree_bound, std::vector<std::vector<Vertex>> adjacency) {
  if (n < 0 || static_cast<std::size_t>(n) != adjacency.size()) {
    throw InputError("adjacency size does not match n");
  }
  if (degree_bound < 0) throw InputError("negative degree bound");
  for (int v = 0; v < n; ++v) {
    const auto& list = adjacency[static_cast<std::size_t>(v)];
    if (static_cast<int>(list.size()) > degree_bound) {
      throw InputError("vertex " + std::to_string(v) + " exceeds degree bound " + std::to_string(degree_bound));
    }
    std::vector<Vertex> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("duplicate neighbour at vertex " + std::to_string(v) + " (multigraphs are rejected)");
    }
    for (Vertex w : list) {
      if (w < 0 || w >= n) throw InputError("neighbour id out of range at vertex " + std::to_string(v));
      if (w == v) throw InputError("self-loop at vertex " + std::to_string(v));
    }
  }
  for (int v = 0; v < n; ++v) {
    for (Vertex w : adjacency[static_cast<std::size_t>(v)]) {
      const auto& back = adjacency[static_cast<std::size_t>(w)];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw InputError("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(w));
      }
    }
  }
  Graph g;
  g.degree_bound_ = degree_bound;
  g.adj_ = std::move(adjacency);
  return g;
}

Graph Graph::from_edges(int n, int degree_bound, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return from_adjacency(n, degree_bound, std::move(adj));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n() || b < 0 || b >= n()) return false;
  const auto nb = neighbors(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = static_cast<int>(adj_.front().size());
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adj_) twice += list.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int v = 0; v < n(); ++v) {
    for (Vertex w : neighbors(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::with_added_edges(std::span<const Edge> extra, int degree_bound) const {
  auto adj = adj_;
  for (const Edge& e : extra) {
    if (e.u < 0 || e.v >= n() || e.u == e.v) throw InputError("added edge out of range or loop");
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return from_adjacency(n(), degree_bound, std::move(adj));
}

Graph Graph::with_removed_edge(Edge e) const {
  if (!has_edge(e.u, e.v)) throw InputError("edge to remove is absent");
  Graph g = *this;
  auto drop = [](std::vector<Vertex>& list, Vertex w) { list.erase(std::find(list.begin(), list.end(), w)); };
  drop(g.adj_[static_cast<std::size_t>(e.u)], e.v);
  drop(g.adj_[static_cast<std::size_t>(e.v)], e.u);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.degree_bound_ != b.degree_bound_) return false;
  return a.edges() == b.edges();
}

bool identical(const Graph& a, const Graph& b) {
  return a.degree_bound() == b.degree_bound() && a.adjacency() == b.adjacency();
}

DiGraph DiGraph::double_of(const Graph& g) {
  DiGraph d;
  d.n = g.n();
  for (const Edge& e : g.edges()) {
    d.arcs.push_back({e.u, e.v});
    d.arcs.push_back({e.v, e.u});
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

std::vector<Arc> DiGraph::in_arcs(Vertex v) const {
  std::vector<Arc> out;
  for (const Arc& a : arcs) {
    if (a.head == v) out.push_back(a);
  }
  return out;
}

std::vector<Arc> DiGraph::out_arcs(Vertex v) const {
  std::vector<Arc> out;
  for (const Arc& a : arcs) {
    if (a.tail == v) out.push_back(a);
  }
  return out;
}

std::string to_string(CycleDefect d) {
  switch (d) {
    case CycleDefect::kNone: return "none";
    case CycleDefect::kTooShort: return "too-short";
    case CycleDefect::kWrongLength: return "wrong-length";
    case CycleDefect::kOutOfRange: return "out-of-range";
    case CycleDefect::kRepeatedVertex: return "repeated-vertex";
    case CycleDefect::kMissingEdge: return "missing-edge";
  }
  return "unknown";
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  s.check_range(g.n());
  std::vector<Vertex> out(s.begin(), s.end());
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) out.push_back(w);
  }
  return VertexSet(std::move(out));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.check_range(g.n());
  // Binary search keeps this proportional to the size of S, not of g.
  const auto ids = s.ids();
  std::vector<std::vector<Vertex>> adj(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      const auto it = std::lower_bound(ids.begin(), ids.end(), w);
      if (it != ids.end() && *it == w) adj[i].push_back(static_cast<Vertex>(it - ids.begin()));
    }
  }
  return Graph::from_adjacency(static_cast<int>(s.size()), g.degree_bound(), std::move(adj));
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {
    const auto n = static_cast<std::size_t>(g.n());
    map_.assign(n, -1);
    used_.assign(n, false);
  }

  bool pin(Vertex u, Vertex t) {
    if (u < 0 || u >= g_.n() || t < 0 || t >= h_.n()) throw InputError("pinned pair out of range");
    if (map_[static_cast<std::size_t>(u)] == t) return true;
    if (map_[static_cast<std::size_t>(u)] != -1 || used_[static_cast<std::size_t>(t)]) return false;
    if (!consistent(u, t)) return false;
    assign(u, t);
    return true;
  }

  bool run() {
    // Most-constrained first: unmapped vertex with most mapped neighbours, then highest degree.
    Vertex best = -1;
    int best_mapped = -1;
    int best_degree = -1;
    for (Vertex u = 0; u < g_.n(); ++u) {
      if (map_[static_cast<std::size_t>(u)] != -1) continue;
      int mapped = 0;
      for (Vertex w : g_.neighbors(u)) mapped += map_[static_cast<std::size_t>(w)] != -1 ? 1 : 0;
      if (mapped > best_mapped || (mapped == best_mapped && g_.degree(u) > best_degree)) {
        best = u;
        best_mapped = mapped;
        best_degree = g_.degree(u);
      }
    }
    if (best == -1) return true;
    for (Vertex t = 0; t < h_.n(); ++t) {
      if (used_[static_cast<std::size_t>(t)] || !consistent(best, t)) continue;
      assign(best, t);
      if (run()) return true;
      map_[static_cast<std::size_t>(best)] = -1;
      used_[static_cast<std::size_t>(t)] = false;
    }
    return false;
  }

  [[nodiscard]] const std::vector<Vertex>& mapping() const { return map_; }

 private:
  bool consistent(Vertex u, Vertex t) const {
    if (g_.degree(u) != h_.degree(t)) return false;
    for (Vertex w = 0; w < g_.n(); ++w) {
      const Vertex image = map_[static_cast<std::size_t>(w)];
      if (image == -1) continue;
      if (g_.has_edge(u, w) != h_.has_edge(t, image)) return false;
    }
    return true;
  }

  void assign(Vertex u, Vertex t) {
    map_[static_cast<std::size_t>(u)] = t;
    used_[static_cast<std::size_t>(t)] = true;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<int> degree_histogram(const Graph& g) {
  std::vector<int> degrees;
  for (Vertex v = 0; v < g.n(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g, const Graph& h,
                                                  std::span<const std::pair<Vertex, Vertex>> pinned) {
  if (g.n() > kIsomorphismVertexCap || h.n() > kIsomorphismVertexCap) {
    throw CapabilityError("isomorphism search is capped at " + std::to_string(kIsomorphismVertexCap) + " vertices");
  }
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (degree_histogram(g) != degree_histogram(h)) return std::nullopt;
  IsoSearch search(g, h);
  for (const auto& [u, t] : pinned) {
    if (!search.pin(u, t)) return std::nullopt;
  }
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

CycleCheck verify_cycle_certificate(const Graph& g, const CycleCertificate& c) {
  const auto& seq = c.order;
  if (seq.size() < 3) return {false, CycleDefect::kTooShort, 0};
  if (seq.size() != static_cast<std::size_t>(g.n())) return {false, CycleDefect::kWrongLength, 0};
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex v = seq[i];
    if (v < 0 || v >= g.n()) return {false, CycleDefect::kOutOfRange, i};
    if (seen[static_cast<std::size_t>(v)]) return {false, CycleDefect::kRepeatedVertex, i};
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.has_edge(seq[i], seq[(i + 1) % seq.size()])) return {false, CycleDefect::kMissingEdge, i};
  }
  return {true, CycleDefect::kNone, 0};
}

bool contains_subpath(const CycleCertificate& c, std::span<const Vertex> p) {
  const std::size_t len = c.order.size();
  if (p.empty()) throw InputError("contains_subpath: empty pattern");
  if (p.size() > len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    bool forward = true;
    bool backward = true;
    for (std::size_t j = 0; j < p.size() && (forward || backward); ++j) {
      forward = forward && c.order[(i + j) % len] == p[j];
      backward = backward && c.order[(i + len - j) % len] == p[j];
    }
    if (forward || backward) return true;
  }
  return false;
}

CycleIndex::CycleIndex(const CycleCertificate& c) : order_(c.order) {
  Vertex top = 0;
  for (Vertex v : order_) {
    if (v < 0) throw InputError("CycleIndex: negative vertex id");
    top = std::max(top, v);
  }
  position_.assign(static_cast<std::size_t>(top) + 1, -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    auto& slot = position_[static_cast<std::size_t>(order_[i])];
    if (slot != -1) throw InputError("CycleIndex: repeated vertex");
    slot = static_cast<long>(i);
  }
}

bool CycleIndex::contains_subpath(std::span<const Vertex> p) const {
  if (p.empty()) throw InputError("contains_subpath: empty pattern");
  const auto len = static_cast<long>(order_.size());
  if (static_cast<long>(p.size()) > len) return false;
  const Vertex first = p.front();
  if (first < 0 || static_cast<std::size_t>(first) >= position_.size()) return false;
  const long start = position_[static_cast<std::size_t>(first)];
  if (start == -1) return false;
  auto matches = [&](long step) {
    for (std::size_t j = 1; j < p.size(); ++j) {
      const long at = ((start + step * static_cast<long>(j)) % len + len) % len;
      if (order_[static_cast<std::size_t>(at)] != p[j]) return false;
    }
    return true;
  };
  return matches(1) || matches(-1);
}

}  // namespace lham
