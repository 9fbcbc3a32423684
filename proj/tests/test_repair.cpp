// Feeder paths, block paths, repair and the family generator.

#include <gtest/gtest.h>

#include <set>

#include "lham/construction.hpp"
#include "lham/error.hpp"
#include "lham/expansion.hpp"
#include "lham/fixtures.hpp"
#include "lham/repair.hpp"
#include "lham/rng.hpp"
#include "lham/structure.hpp"
#include "oracles.hpp"

using namespace lham;

namespace {

std::vector<Vertex> indices(const Codec& c, Arc e, std::initializer_list<int> is) {
  std::vector<Vertex> out;
  for (int i : is) out.push_back(c.a(e, i));
  return out;
}

std::vector<Vertex> range(const Codec& c, Arc e, int from, int to) {
  std::vector<Vertex> out;
  for (int i = from; from <= to ? i <= to : i >= to; i += from <= to ? 1 : -1) out.push_back(c.a(e, i));
  return out;
}

std::vector<Vertex> concat(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Everything repair promises, checked from the outside.
void check_repair(const Construction& ge, const VerifiedExpander& base, const VertexSet& s) {
  const RepairResult r = repair(ge, base, s);
  const int d = base.base().d();
  EXPECT_LE(r.h.max_degree(), d + 3);
  EXPECT_TRUE(verify_cycle_certificate(r.h, r.cycle));
  EXPECT_TRUE(local_ham_certificate(ge.graph, r.h, s, r.cycle));
  for (const Edge& e : r.plan.added_edges) {
    EXPECT_FALSE(r.plan.s_prime.contains(ge.codec.block_of(e.u)));
    EXPECT_FALSE(r.plan.s_prime.contains(ge.codec.block_of(e.v)));
    EXPECT_FALSE(ge.graph.has_edge(e.u, e.v));
  }
  EXPECT_EQ(r.h.edge_count(), ge.graph.edge_count() + r.plan.added_edges.size());
  EXPECT_EQ(r.plan.feeders.size(), r.plan.s_prime.size());
}

}  // namespace

TEST(Feeders, TriangleSingleVertex) {
  const BaseGraph c3 = make_base("c3");
  EXPECT_EQ(find_feeder_paths(c3, VertexSet{2}), (std::vector<FeederPath>{{0, 2}}));
  EXPECT_EQ(find_feeder_paths(c3, VertexSet{0}), (std::vector<FeederPath>{{1, 0}}));
  EXPECT_TRUE(find_feeder_paths(c3, VertexSet{}).empty());
  EXPECT_THROW((void)find_feeder_paths(c3, VertexSet{0, 1}), InputError);
}

TEST(Feeders, EdgeDisjointAndEndingInsideOnPetersen) {
  const BaseGraph p = make_base("petersen");
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vertex> ids;
    const auto size = 1 + uniform_below(rng, 5);
    for (std::uint64_t i = 0; i < size; ++i) ids.push_back(static_cast<Vertex>(uniform_below(rng, 10)));
    const VertexSet s(ids);
    const auto feeders = find_feeder_paths(p, s);
    ASSERT_EQ(feeders.size(), s.size());
    std::set<Edge> used;
    std::set<Vertex> ends;
    for (const FeederPath& q : feeders) {
      ASSERT_GE(q.size(), 2u);
      EXPECT_FALSE(s.contains(q.front()));
      for (std::size_t j = 1; j < q.size(); ++j) {
        EXPECT_TRUE(s.contains(q[j]));
        EXPECT_TRUE(p.graph().has_edge(q[j - 1], q[j]));
        EXPECT_TRUE(used.insert(Edge(q[j - 1], q[j])).second);
      }
      EXPECT_TRUE(ends.insert(q.back()).second);
    }
  }
}

TEST(Feeders, ValidationNamesBrokenInvariants) {
  const BaseGraph c3 = make_base("c3");
  EXPECT_NO_THROW(validate_feeder_paths(c3, VertexSet{2}, {{0, 2}}));
  EXPECT_THROW(validate_feeder_paths(c3, VertexSet{2}, {{2, 0}}), InvariantViolation);
  EXPECT_THROW(validate_feeder_paths(c3, VertexSet{2}, {{0, 1, 2}}), InvariantViolation);
  EXPECT_THROW(validate_feeder_paths(c3, VertexSet{2}, {}), InvariantViolation);
  const BaseGraph p = make_base("petersen");
  const auto ok = find_feeder_paths(p, VertexSet{0, 1});
  auto shared = ok;
  shared[1] = shared[0];
  EXPECT_THROW(validate_feeder_paths(p, VertexSet{0, 1}, shared), InvariantViolation);
}

TEST(Feeders, LowExpansionBaseHasNoFullFlow) {
  // Two K4-minus-an-edge joined by two edges: the flow
  // cannot feed all four vertices of one side through two cut edges.
  const BaseGraph poor(oracle::poor_cubic_expander());
  EXPECT_THROW((void)find_feeder_paths(poor, VertexSet{0, 1, 2, 3}), InvariantViolation);
}

TEST(BlockPaths, InnerBlockOnTriangle) {
  const BaseGraph c3 = make_base("c3");
  const Construction ge = build_construction(c3);
  const Codec& c = ge.codec;
  const DiGraph arcs = DiGraph::double_of(c3.graph());
  const BlockPaths b = inner_block_paths(c, arcs, 2, {{0, 2}}, {}, 0);
  EXPECT_EQ(b.in_paths.at({0, 2}), concat({range(c, {0, 2}, 20, 18), indices(c, {2, 0}, {8, 7, 6, 11, 10, 9}),
                                           indices(c, {0, 2}, {29, 28, 27, 30, 31})}));
  EXPECT_EQ(b.out_paths.at({2, 0}),
            concat({range(c, {2, 0}, 1, 5), {c.b(2, 1), c.b(2, 2), c.b(2, 3)},
                    indices(c, {0, 2}, {23, 22, 21, 26, 25, 24}), {c.b(2, 4), c.b(2, 5), c.b(2, 6)},
                    range(c, {2, 0}, 12, 17)}));
  EXPECT_EQ(b.in_paths.at({1, 2}), range(c, {1, 2}, 18, 31));
  EXPECT_EQ(b.out_paths.at({2, 1}), range(c, {2, 1}, 1, 17));
  EXPECT_NO_THROW(validate_block_paths(c, arcs, b));
  // Every consecutive pair is an edge of G_E: the block needs no added edge.
  for (const auto* side : {&b.in_paths, &b.out_paths}) {
    for (const auto& [arc, path] : *side) {
      for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(ge.graph.has_edge(path[i], path[i + 1]));
    }
  }
}

TEST(BlockPaths, InnerBlockPreconditions) {
  const BaseGraph c3 = make_base("c3");
  const Construction ge = build_construction(c3);
  const DiGraph arcs = DiGraph::double_of(c3.graph());
  EXPECT_THROW((void)inner_block_paths(ge.codec, arcs, 2, {}, {}, 0), InputError);
  EXPECT_THROW((void)inner_block_paths(ge.codec, arcs, 2, {{0, 2}}, {}, 2), InputError);
  EXPECT_THROW((void)inner_block_paths(ge.codec, arcs, 2, {{0, 2}, {1, 2}}, {{2, 0}}, 0), InputError);
}

TEST(BlockPaths, InnerBlockWithAForwardedArc) {
  // K4, v = 0 fed by (1,0) and (2,0), forwarding along (0,3).
  const BaseGraph k4 = make_base("k4");
  const Construction ge = build_construction(k4);
  const Codec& c = ge.codec;
  const DiGraph arcs = DiGraph::double_of(k4.graph());
  const BlockPaths b = inner_block_paths(c, arcs, 0, {{1, 0}, {2, 0}}, {{0, 3}}, 1);
  // Sorted pairing: (1,0) with (0,1) = (v, n(v)), (2,0) with (0,3).
  EXPECT_EQ(b.out_paths.at({0, 3}), concat({indices(c, {0, 3}, {1, 2, 5, 4, 3}),
                                            indices(c, {2, 0}, {23, 22, 21, 26, 25, 24}),
                                            indices(c, {0, 3}, {14, 13, 12, 17, 16, 15})}));
  EXPECT_NO_THROW(validate_block_paths(c, arcs, b));
}

TEST(BlockPaths, OuterBlockOnTriangle) {
  const BaseGraph c3 = make_base("c3");
  const Construction ge = build_construction(c3);
  const Codec& c = ge.codec;
  const DiGraph arcs = DiGraph::double_of(c3.graph());
  const BlockPaths b = outer_block_paths(c, arcs, 0, {{0, 2}}, 1);
  EXPECT_EQ(b.out_paths.at({0, 2}), concat({range(c, {0, 2}, 1, 13), indices(c, {0, 2}, {14, 17, 16, 15})}));
  EXPECT_EQ(b.out_paths.at({0, 1}),
            concat({range(c, {0, 1}, 1, 4), {c.b(0, 3), c.b(0, 2), c.b(0, 1)}, range(c, {0, 1}, 5, 12),
                    {c.b(0, 6), c.b(0, 5), c.b(0, 4)}, range(c, {0, 1}, 13, 17)}));
  EXPECT_EQ(b.in_paths.at({1, 0}), range(c, {1, 0}, 18, 31));
  EXPECT_NO_THROW(validate_block_paths(c, arcs, b));

  // A feeder starting on the chosen arc takes the hub detour and the skip.
  const BlockPaths same = outer_block_paths(c, arcs, 0, {{0, 1}}, 1);
  EXPECT_EQ(same.out_paths.at({0, 1}),
            concat({range(c, {0, 1}, 1, 4), {c.b(0, 3), c.b(0, 2), c.b(0, 1)}, range(c, {0, 1}, 5, 12),
                    {c.b(0, 6), c.b(0, 5), c.b(0, 4)}, indices(c, {0, 1}, {13, 14, 17, 16, 15})}));
  EXPECT_NO_THROW(validate_block_paths(c, arcs, same));
}

TEST(BlockPaths, ValidationCatchesOverlapAndGaps) {
  const BaseGraph c3 = make_base("c3");
  const Construction ge = build_construction(c3);
  const DiGraph arcs = DiGraph::double_of(c3.graph());
  BlockPaths b = outer_block_paths(ge.codec, arcs, 0, {}, 1);
  b.in_paths.at({1, 0}).pop_back();
  EXPECT_THROW(validate_block_paths(ge.codec, arcs, b), InvariantViolation);
  b = outer_block_paths(ge.codec, arcs, 0, {}, 1);
  b.in_paths.at({1, 0}).push_back(ge.codec.b(0, 1));
  EXPECT_THROW(validate_block_paths(ge.codec, arcs, b), InvariantViolation);
}

TEST(Repair, TriangleSingletonPlanIsFrozen) {
  const VerifiedExpander base(make_base("c3"));
  const Construction ge = build_construction(base.base());
  const RepairResult r = repair(ge, base, VertexSet{7});
  EXPECT_EQ(r.plan.s_prime, VertexSet{0});
  EXPECT_EQ(r.plan.feeders, (std::vector<FeederPath>{{1, 0}}));
  EXPECT_EQ(r.plan.n_of, (std::map<Vertex, Vertex>{{0, 1}, {1, 0}, {2, 0}}));
  const Codec& c = ge.codec;
  EXPECT_EQ(r.plan.added_edges,
            (std::vector<Edge>{{c.b(1, 3), c.a({1, 0}, 4)}, {c.b(1, 4), c.a({1, 0}, 13)},
                               {c.b(2, 3), c.a({2, 0}, 4)}, {c.b(2, 4), c.a({2, 0}, 13)},
                               {c.a({1, 0}, 14), c.a({1, 0}, 17)}}));
  const nlohmann::json j = repair_plan_to_json(r.plan, c);
  EXPECT_EQ(j.at("added_edges").at(0).at("names"), nlohmann::json::array({"a4(1,0)", "b3(1)"}));
  EXPECT_EQ(j.at("t_in").at("0"), nlohmann::json::parse("[[1,0]]"));
  EXPECT_EQ(j.at("t_out").at("0"), nlohmann::json::array());
  EXPECT_TRUE(local_ham_certificate(ge.graph, r.h, VertexSet{7}, r.cycle));
}

TEST(Repair, EveryTriangleSingleton) {
  const VerifiedExpander base(make_base("c3"));
  const Construction ge = build_construction(base.base());
  for (Vertex x = 0; x < ge.graph.n(); ++x) check_repair(ge, base, VertexSet{x});
}

TEST(Repair, RandomSetsOnPetersenAndK4) {
  for (const char* spec : {"petersen", "k4"}) {
    const VerifiedExpander base(make_base(spec));
    const Construction ge = build_construction(base.base());
    const Rational budget = construction_constants(base.base().d()).delta * Rational(ge.graph.n());
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Vertex> ids;
      const auto size = 1 + uniform_below(rng, static_cast<std::uint64_t>(budget.num() / budget.den()));
      for (std::uint64_t i = 0; i < size; ++i) ids.push_back(static_cast<Vertex>(uniform_below(rng, ge.graph.n())));
      check_repair(ge, base, VertexSet(ids));
    }
  }
}

TEST(Repair, RangesOfRepairedCycleMatchTheAddedEdges) {
  const VerifiedExpander base(make_base("petersen"));
  const Construction ge = build_construction(base.base());
  const DiGraph arcs = DiGraph::double_of(base.base().graph());
  const RepairResult r = repair(ge, base, VertexSet{3, 400, 871});
  const CycleIndex index(r.cycle);
  std::set<Arc> neither;
  for (const Arc& a : arcs.arcs) {
    if (classify_gadget_traversal(index, ge.codec, a).any_neither()) neither.insert(a);
  }
  std::set<Arc> touched;
  for (const Edge& e : r.plan.added_edges) {
    for (Vertex x : {e.u, e.v}) {
      const VertexName name = ge.codec.name(x);
      if (const auto* g = std::get_if<GadgetSlot>(&name)) touched.insert(g->arc);
    }
  }
  EXPECT_EQ(neither, touched);
  for (Vertex v = 0; v < base.base().n(); ++v) {
    if (r.plan.s_prime.contains(v)) continue;
    const TSets t = t_sets(index, ge.codec, arcs, v);
    EXPECT_EQ(t.t_out.size(), t.t_in.size() + 1) << "v=" << v;
  }
}

TEST(Repair, RejectsBadSets) {
  const VerifiedExpander base(make_base("c3"));
  const Construction ge = build_construction(base.base());
  EXPECT_THROW((void)repair(ge, base, VertexSet{}), InputError);
  EXPECT_THROW((void)repair(ge, base, VertexSet{0, 100}), InputError);  // above delta * 204
  EXPECT_THROW((void)repair(ge, base, VertexSet{204}), InputError);
  const VerifiedExpander other(make_base("k4"));
  EXPECT_THROW((void)repair(ge, other, VertexSet{0}), InputError);
}

TEST(Repair, LowExpansionBaseIsRejectedBeforeRepair) {
  EXPECT_THROW(VerifiedExpander(BaseGraph(oracle::poor_cubic_expander())), ExpansionError);
}

TEST(LocalCertificate, DetectsChangesNearS) {
  const VerifiedExpander base(make_base("c3"));
  const Construction ge = build_construction(base.base());
  const RepairResult r = repair(ge, base, VertexSet{7});
  EXPECT_TRUE(local_ham_certificate(ge.graph, r.h, VertexSet{7}, r.cycle));
  // S placed on an added edge sees the difference.
  const Edge added = r.plan.added_edges.front();
  EXPECT_FALSE(local_ham_certificate(ge.graph, r.h, VertexSet{added.u}, r.cycle));
  CycleCertificate broken = r.cycle;
  std::swap(broken.order[0], broken.order[5]);
  EXPECT_FALSE(local_ham_certificate(ge.graph, r.h, VertexSet{7}, broken));
  EXPECT_FALSE(local_ham_certificate(ge.graph, ge.graph, VertexSet{7}, r.cycle));
}

TEST(Family, CompleteAndRandomRegular) {
  const FamilyResult k = family("complete:4", 3);
  ASSERT_EQ(k.members.size(), 3u);
  EXPECT_EQ(k.members[0].base.n(), 4);
  EXPECT_EQ(k.members[2].construction.graph.n(), (6 + 31 * 5) * 6);
  const FamilyResult rr = family("random_regular:3:10:1", 2);
  ASSERT_EQ(rr.members.size(), 2u);
  EXPECT_LT(rr.members[0].base.n(), rr.members[1].base.n());
  for (const FamilyMember& m : rr.members) EXPECT_GE(m.expansion.h, Rational(1));
  EXPECT_THROW((void)family("cycle:5", 1), InputError);
  EXPECT_THROW((void)family("complete:x", 1), InputError);
  EXPECT_TRUE(family("complete:4", 0).members.empty());
}
