#include "lham/structure.hpp"

#include <algorithm>

#include "lham/error.hpp"

namespace lham {

std::string to_string(RangeOrder r) {
  switch (r) {
    case RangeOrder::kInOrder: return "InOrder";
    case RangeOrder::kOutOfOrder: return "OutOfOrder";
    case RangeOrder::kNeither: return "Neither";
  }
  return "unknown";
}

std::vector<int> in_order_indices(GadgetRange r) {
  switch (r) {
    case GadgetRange::kHead: return {1, 2, 3, 4, 5};
    case GadgetRange::kTail: return {27, 28, 29, 30, 31};
    case GadgetRange::kMiddle: return {12, 13, 14, 15, 16, 17, 18, 19, 20};
    case GadgetRange::kOutSide: return {6, 7, 8, 9, 10, 11};
    case GadgetRange::kInSide: return {21, 22, 23, 24, 25, 26};
  }
  return {};
}

std::vector<int> out_of_order_indices(GadgetRange r) {
  switch (r) {
    case GadgetRange::kHead: return {1, 2, 5, 4, 3};
    case GadgetRange::kTail: return {29, 28, 27, 30, 31};
    case GadgetRange::kMiddle: return {14, 13, 12, 17, 16, 15, 20, 19, 18};
    case GadgetRange::kOutSide: return {8, 7, 6, 11, 10, 9};
    case GadgetRange::kInSide: return {23, 22, 21, 26, 25, 24};
  }
  return {};
}

bool GadgetTraversal::any_neither() const {
  return std::find(ranges.begin(), ranges.end(), RangeOrder::kNeither) != ranges.end();
}

namespace {

std::vector<Vertex> gadget_path(const Codec& codec, Arc arc, const std::vector<int>& indices) {
  std::vector<Vertex> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(codec.a(arc, i));
  return out;
}

}  // namespace

GadgetTraversal classify_gadget_traversal(const CycleIndex& cycle, const Codec& codec, Arc arc) {
  GadgetTraversal t;
  t.arc = arc;
  for (std::size_t r = 0; r < kGadgetRanges.size(); ++r) {
    const GadgetRange range = kGadgetRanges[r];
    if (cycle.contains_subpath(gadget_path(codec, arc, in_order_indices(range)))) {
      t.ranges[r] = RangeOrder::kInOrder;
    } else if (cycle.contains_subpath(gadget_path(codec, arc, out_of_order_indices(range)))) {
      t.ranges[r] = RangeOrder::kOutOfOrder;
    } else {
      t.ranges[r] = RangeOrder::kNeither;
    }
  }
  return t;
}

TSets t_sets(const CycleIndex& cycle, const Codec& codec, const DiGraph& arcs, Vertex v) {
  TSets out;
  for (const Arc& e : arcs.in_arcs(v)) {
    if (cycle.contains_subpath({codec.a(e, 12), codec.a(e, 17)})) out.t_in.push_back(e);
  }
  for (const Arc& e : arcs.out_arcs(v)) {
    if (cycle.contains_subpath({codec.a(e, 12), codec.a(e, 17)}) ||
        cycle.contains_subpath({codec.a(e, 12), codec.b(v, 6)})) {
      out.t_out.push_back(e);
    }
  }
  return out;
}

ConstructionConstants construction_constants(int d) {
  if (d < 2) throw InputError("construction constants need d >= 2");
  const std::int64_t dd = d;
  const std::int64_t size_factor = 6 + 31 * dd;
  const Rational epsilon(1, 8 * (dd + 3) * (dd + 3) * size_factor);
  return {epsilon, Rational(1, 2 * size_factor), Rational(2 * dd) * epsilon};
}

}  // namespace lham
