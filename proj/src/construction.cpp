#include "lham/construction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "lham/error.hpp"

namespace lham {

BaseGraph::BaseGraph(Graph g) : g_(std::move(g)) {
  if (g_.n() == 0) throw InputError("base graph is empty");
  d_ = g_.degree(0);
  for (Vertex v = 0; v < g_.n(); ++v) {
    if (g_.degree(v) != d_) {
      throw InputError("base graph is not regular: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g_.degree(v)) + ", expected " + std::to_string(d_));
    }
  }
  if (d_ < 2) throw InputError("base graph must have degree at least 2");
}

EdgeOrder::EdgeOrder(std::vector<Arc> arcs_in_order) : arcs_(std::move(arcs_in_order)) {
  sorted_index_.resize(arcs_.size());
  std::iota(sorted_index_.begin(), sorted_index_.end(), std::size_t{0});
  std::sort(sorted_index_.begin(), sorted_index_.end(),
            [this](std::size_t a, std::size_t b) { return arcs_[a] < arcs_[b]; });
  for (std::size_t i = 1; i < sorted_index_.size(); ++i) {
    if (arcs_[sorted_index_[i - 1]] == arcs_[sorted_index_[i]]) throw InputError("edge order repeats an arc");
  }
}

EdgeOrder EdgeOrder::lexicographic(const BaseGraph& base) {
  return EdgeOrder(DiGraph::double_of(base.graph()).arcs);
}

std::size_t EdgeOrder::position(Arc a) const {
  auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), a,
                             [this](std::size_t idx, const Arc& key) { return arcs_[idx] < key; });
  if (it == sorted_index_.end() || arcs_[*it] != a) {
    throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") not in edge order");
  }
  return *it;
}

Codec::Codec(int n_base, int d, EdgeOrder order) : n_base_(n_base), d_(d), order_(std::move(order)) {
  if (order_.size() != static_cast<std::size_t>(n_base_) * static_cast<std::size_t>(d_)) {
    throw InputError("edge order size does not match n*d arcs");
  }
}

int Codec::vertex_count() const { return gadget_vertex_count() + kHubSize * n_base_; }

Vertex Codec::a(Arc arc, int index) const {
  if (index < 1 || index > kGadgetSize) throw InputError("gadget index out of [1,31]");
  return static_cast<Vertex>(order_.position(arc)) * kGadgetSize + (index - 1);
}

Vertex Codec::b(Vertex base, int index) const {
  if (index < 1 || index > kHubSize) throw InputError("hub index out of [1,6]");
  if (base < 0 || base >= n_base_) throw InputError("base vertex out of range");
  return gadget_vertex_count() + base * kHubSize + (index - 1);
}

Vertex Codec::id(const VertexName& name) const {
  if (const auto* g = std::get_if<GadgetSlot>(&name)) return a(g->arc, g->index);
  const auto& h = std::get<HubSlot>(name);
  return b(h.base, h.index);
}

VertexName Codec::name(Vertex id) const {
  if (id < 0 || id >= vertex_count()) throw InputError("vertex id out of range for codec");
  if (id < gadget_vertex_count()) {
    return GadgetSlot{order_.at(static_cast<std::size_t>(id / kGadgetSize)), id % kGadgetSize + 1};
  }
  const int rest = id - gadget_vertex_count();
  return HubSlot{rest / kHubSize, rest % kHubSize + 1};
}

Vertex Codec::block_of(Vertex id) const {
  const VertexName n = name(id);
  if (const auto* g = std::get_if<GadgetSlot>(&n)) return g->index >= 18 ? g->arc.head : g->arc.tail;
  return std::get<HubSlot>(n).base;
}

std::vector<Edge> build_path_gadget(std::span<const Vertex, kGadgetSize> labels) {
  std::set<Vertex> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw InputError("path gadget labels must be distinct");
  auto at = [&](int i) { return labels[static_cast<std::size_t>(i - 1)]; };
  std::vector<Edge> out;
  for (int i = 1; i <= 30; ++i) out.emplace_back(at(i), at(i + 1));
  for (int j : {2, 27}) out.emplace_back(at(j), at(j + 3));
  for (int k : {6, 12, 15, 21}) out.emplace_back(at(k), at(k + 5));
  return out;
}

std::vector<Edge> build_link(std::span<const Vertex, kGadgetSize> u, std::span<const Vertex, kGadgetSize> v,
                             std::span<const Vertex, kHubSize> w) {
  std::set<Vertex> all;
  all.insert(u.begin(), u.end());
  all.insert(v.begin(), v.end());
  all.insert(w.begin(), w.end());
  if (all.size() != 2 * kGadgetSize + kHubSize) throw InputError("link label sets must be pairwise disjoint");
  auto U = [&](int i) { return u[static_cast<std::size_t>(i - 1)]; };
  auto V = [&](int i) { return v[static_cast<std::size_t>(i - 1)]; };
  auto W = [&](int i) { return w[static_cast<std::size_t>(i - 1)]; };
  return {
      {U(23), V(3)}, {U(18), V(8)}, {U(29), V(9)}, {U(24), V(14)},
      {V(5), W(1)},  {W(1), W(2)},  {W(2), W(3)},  {W(3), U(23)},
      {U(24), W(4)}, {W(4), W(5)},  {W(5), W(6)},  {W(6), V(12)},
  };
}

namespace {

std::array<Vertex, kGadgetSize> gadget_labels(const Codec& codec, Arc arc) {
  std::array<Vertex, kGadgetSize> labels{};
  for (int i = 1; i <= kGadgetSize; ++i) labels[static_cast<std::size_t>(i - 1)] = codec.a(arc, i);
  return labels;
}

}  // namespace

Construction build_construction(const BaseGraph& base, const EdgeOrder& order) {
  const DiGraph doubled = DiGraph::double_of(base.graph());
  {
    std::vector<Arc> given(order.arcs().begin(), order.arcs().end());
    std::sort(given.begin(), given.end());
    if (given != doubled.arcs) throw InputError("edge order is not a permutation of the base graph's arcs");
  }
  Codec codec(base.n(), base.d(), order);
  std::set<Edge> edges;

  for (const Arc& arc : order.arcs()) {
    const auto labels = gadget_labels(codec, arc);
    for (const Edge& e : build_path_gadget(labels)) edges.insert(e);
  }
  const std::size_t count = order.size();
  for (std::size_t i = 0; i < count; ++i) {
    edges.insert(Edge(codec.a(order.at(i), kGadgetSize), codec.a(order.at((i + 1) % count), 1)));
  }
  for (Vertex v = 0; v < base.n(); ++v) {
    std::array<Vertex, kHubSize> hub{};
    for (int k = 1; k <= kHubSize; ++k) hub[static_cast<std::size_t>(k - 1)] = codec.b(v, k);
    for (const Arc& in : doubled.in_arcs(v)) {
      const auto u_labels = gadget_labels(codec, in);
      for (const Arc& out : doubled.out_arcs(v)) {
        const auto v_labels = gadget_labels(codec, out);
        for (const Edge& e : build_link(u_labels, v_labels, hub)) edges.insert(e);
      }
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  Graph g = Graph::from_edges(codec.vertex_count(), base.d() + 3, list);
  return {std::move(g), std::move(codec)};
}

Construction build_construction(const BaseGraph& base) {
  return build_construction(base, EdgeOrder::lexicographic(base));
}

CycleCertificate master_cycle(const Codec& codec) {
  CycleCertificate c;
  c.order.resize(static_cast<std::size_t>(codec.gadget_vertex_count()));
  std::iota(c.order.begin(), c.order.end(), 0);
  return c;
}

VertexSet half_block(const Codec& codec, const DiGraph& arcs, Vertex v) {
  std::vector<Vertex> ids;
  for (const Arc& e : arcs.in_arcs(v)) {
    for (int i = 18; i <= kGadgetSize; ++i) ids.push_back(codec.a(e, i));
  }
  for (const Arc& e : arcs.out_arcs(v)) {
    for (int i = 1; i <= 17; ++i) ids.push_back(codec.a(e, i));
  }
  for (int k = 1; k <= kHubSize; ++k) ids.push_back(codec.b(v, k));
  return VertexSet(std::move(ids));
}

}  // namespace lham
