#pragma once

#include <array>
#include <span>
#include <variant>
#include <vector>

#include "lham/graph.hpp"

namespace lham {

inline constexpr int kGadgetSize = 31;  // vertices of the path gadget
inline constexpr int kHubSize = 6;      // link vertices per base vertex

/// A d-regular base graph (d >= 2).
class BaseGraph {
 public:
  /// Throws InputError if `g` is not regular of degree at least 2.
  explicit BaseGraph(Graph g);

  [[nodiscard]] const Graph& graph() const { return g_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n() const { return g_.n(); }

 private:
  Graph g_;
  int d_ = 0;
};

/// Linear order f on the arcs of the doubled base graph. Position 0 is f = 1.
class EdgeOrder {
 public:
  explicit EdgeOrder(std::vector<Arc> arcs_in_order);

  /// Lexicographic on (tail, head).
  static EdgeOrder lexicographic(const BaseGraph& base);

  [[nodiscard]] std::span<const Arc> arcs() const { return arcs_; }
  [[nodiscard]] std::size_t size() const { return arcs_.size(); }
  [[nodiscard]] const Arc& at(std::size_t position) const { return arcs_[position]; }
  /// Zero-based position of `a`; throws InputError if absent.
  [[nodiscard]] std::size_t position(Arc a) const;

  friend bool operator==(const EdgeOrder&, const EdgeOrder&) = default;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::size_t> sorted_index_;  // positions sorted by arc value
};

/// a_index^arc, index in [1, 31].
struct GadgetSlot {
  Arc arc;
  int index = 1;
  friend bool operator==(const GadgetSlot&, const GadgetSlot&) = default;
};

/// b_index^base, index in [1, 6].
struct HubSlot {
  Vertex base = 0;
  int index = 1;
  friend bool operator==(const HubSlot&, const HubSlot&) = default;
};

using VertexName = std::variant<GadgetSlot, HubSlot>;

/// Bijection between structured names and dense ids.
///
/// Layout: gadget slots first in master-cycle order, id = f(e)*31 + (i-1) with f
/// zero-based; then hub slots, id = 31*|arcs| + 6*v + (k-1).
class Codec {
 public:
  Codec(int n_base, int d, EdgeOrder order);

  [[nodiscard]] int n_base() const { return n_base_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] const EdgeOrder& order() const { return order_; }
  [[nodiscard]] int vertex_count() const;
  [[nodiscard]] int gadget_vertex_count() const { return kGadgetSize * static_cast<int>(order_.size()); }

  [[nodiscard]] Vertex id(const VertexName& name) const;
  [[nodiscard]] VertexName name(Vertex id) const;
  [[nodiscard]] Vertex a(Arc arc, int index) const;
  [[nodiscard]] Vertex b(Vertex base, int index) const;
  /// Base vertex whose block S_v^half contains `id`: head for indices 18..31,
  /// tail for 1..17, the owner for hub slots.
  [[nodiscard]] Vertex block_of(Vertex id) const;

  friend bool operator==(const Codec&, const Codec&) = default;

 private:
  int n_base_;
  int d_;
  EdgeOrder order_;
};

/// Edges of the path gadget P(v_1..v_31): chain, +3 chords from 2 and 27,
/// +5 chords from 6, 12, 15, 21.
std::vector<Edge> build_path_gadget(std::span<const Vertex, kGadgetSize> labels);

/// The 12 edges of a link from P(u) to P(v) via w_1..w_6.
std::vector<Edge> build_link(std::span<const Vertex, kGadgetSize> u, std::span<const Vertex, kGadgetSize> v,
                             std::span<const Vertex, kHubSize> w);

struct Construction {
  Graph graph;
  Codec codec;
};

/// Gadget per arc, connector cycle in f-order, and a link for every composable
/// arc pair (u,v),(v,w) including w = u. Degree bound d+3, adjacency sorted by id.
Construction build_construction(const BaseGraph& base, const EdgeOrder& order);
Construction build_construction(const BaseGraph& base);

/// The 31dn-cycle through all gadget vertices (ids 0..31|arcs|-1 in order).
CycleCertificate master_cycle(const Codec& codec);

/// Vertices of block S_v^half: a_18..a_31 of in-arcs, a_1..a_17 of out-arcs, b_1..b_6.
VertexSet half_block(const Codec& codec, const DiGraph& arcs, Vertex v);

/// Gadget indices with degree 2 for every base graph.
inline constexpr std::array<int, 11> kDegreeTwoGadgetIndices = {1, 4, 7, 10, 13, 16, 19, 22, 25, 28, 31};
inline constexpr std::array<int, 2> kDegreeTwoHubIndices = {2, 5};

}  // namespace lham
