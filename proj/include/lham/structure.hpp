#pragma once

#include <array>
#include <string>
#include <vector>

#include "lham/construction.hpp"
#include "lham/graph.hpp"
#include "lham/rational.hpp"

namespace lham {

enum class RangeOrder { kInOrder, kOutOfOrder, kNeither };

std::string to_string(RangeOrder r);

/// The five index ranges of a gadget that any Hamiltonian cycle of G_E must
/// traverse in one of two ways.
enum class GadgetRange { kHead, kTail, kMiddle, kOutSide, kInSide };

inline constexpr std::array<GadgetRange, 5> kGadgetRanges = {
    GadgetRange::kHead, GadgetRange::kTail, GadgetRange::kMiddle, GadgetRange::kOutSide, GadgetRange::kInSide};

/// Index sequences of the two admissible traversals of a range.
std::vector<int> in_order_indices(GadgetRange r);
std::vector<int> out_of_order_indices(GadgetRange r);

struct GadgetTraversal {
  Arc arc;
  // a1..a5, a27..a31, a12..a20, a6..a11, a21..a26 in that order.
  std::array<RangeOrder, 5> ranges{};

  [[nodiscard]] bool any_neither() const;
};

/// Classifies each range by literal subpath matching against the cycle.
GadgetTraversal classify_gadget_traversal(const CycleIndex& cycle, const Codec& codec, Arc arc);

struct TSets {
  std::vector<Arc> t_in;   // in-arcs e with (a12^e, a17^e) on the cycle
  std::vector<Arc> t_out;  // out-arcs e with (a12^e, a17^e) or (a12^e, b6^v) on the cycle
};

TSets t_sets(const CycleIndex& cycle, const Codec& codec, const DiGraph& arcs, Vertex v);

/// Farness, locality and witness-density constants of the construction for a
/// base of degree d: epsilon = 1/(8(d+3)^2(6+31d)), delta = 1/(2(6+31d)),
/// lambda = 2 d epsilon.
struct ConstructionConstants {
  Rational epsilon;
  Rational delta;
  Rational lambda;
};

/// Throws InputError for d < 2.
ConstructionConstants construction_constants(int d);

}  // namespace lham
