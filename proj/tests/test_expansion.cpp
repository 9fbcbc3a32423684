// Exact expansion ratio, random regular bases and the expansion gate.

#include <gtest/gtest.h>

#include "lham/error.hpp"
#include "lham/expansion.hpp"
#include "lham/fixtures.hpp"
#include "oracles.hpp"

using namespace lham;

TEST(Expansion, KnownValues) {
  EXPECT_EQ(expansion_ratio(fixtures::petersen()).h, Rational(1));
  EXPECT_EQ(expansion_ratio(fixtures::complete(4)).h, Rational(2));
  EXPECT_EQ(expansion_ratio(fixtures::complete(3)).h, Rational(2));
  EXPECT_EQ(expansion_ratio(fixtures::cycle(8)).h, Rational(1, 2));
  EXPECT_EQ(expansion_ratio(oracle::poor_cubic_expander()).h, Rational(1, 2));
}

TEST(Expansion, WitnessIsLexicographicallySmallestMinimiser) {
  const ExpansionReport r = expansion_ratio(fixtures::cycle(6));
  EXPECT_EQ(r.h, Rational(2, 3));
  EXPECT_EQ(r.cut_edges, 2);
  EXPECT_EQ(r.witness, (VertexSet{0, 1, 2}));
}

TEST(Expansion, AgreesWithSubsetListing) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : oracle::graphs_up_to_isomorphism(n)) {
      if (n == 8 && g.edge_count() % 5 != 0) continue;  // a slice of the 12346 keeps this quick
      ASSERT_EQ(expansion_ratio(g).h, oracle::expansion_by_subsets(g));
    }
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BaseGraph b = random_regular(3, 14, seed);
    EXPECT_EQ(expansion_ratio(b.graph()).h, oracle::expansion_by_subsets(b.graph()));
  }
}

TEST(Expansion, Limits) {
  EXPECT_THROW((void)expansion_ratio(fixtures::cycle(25)), CapabilityError);
  EXPECT_THROW((void)expansion_ratio(Graph::from_edges(1, 0, {})), InputError);
}

TEST(RandomRegular, RegularSimpleAndDeterministic) {
  const BaseGraph a = random_regular(3, 12, 99);
  const BaseGraph b = random_regular(3, 12, 99);
  EXPECT_TRUE(identical(a.graph(), b.graph()));
  EXPECT_EQ(a.d(), 3);
  EXPECT_EQ(a.n(), 12);
  EXPECT_EQ(a.graph().edge_count(), 18u);
  EXPECT_FALSE(identical(a.graph(), random_regular(3, 12, 100).graph()));
  EXPECT_THROW((void)random_regular(3, 7, 1), InputError);
  EXPECT_THROW((void)random_regular(5, 5, 1), InputError);
}

TEST(MakeBase, Specs) {
  EXPECT_EQ(make_base("c3").n(), 3);
  EXPECT_EQ(make_base("k5").d(), 4);
  EXPECT_EQ(make_base("complete:6").d(), 5);
  EXPECT_EQ(make_base("random_regular:4:9:3").n(), 9);
  EXPECT_THROW((void)make_base("nope"), InputError);
  EXPECT_THROW((void)make_base("file:/nonexistent/graph.json"), InputError);
}

TEST(VerifiedExpander, Gate) {
  EXPECT_NO_THROW(VerifiedExpander(make_base("petersen")));
  EXPECT_THROW(VerifiedExpander(BaseGraph(oracle::poor_cubic_expander())), ExpansionError);
  EXPECT_THROW(VerifiedExpander(BaseGraph(fixtures::cycle(6))), ExpansionError);
}
