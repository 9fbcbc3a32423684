// Command-line frontend: build, inspect, solve, repair and test G_E instances.
//
// Exit codes: 0 result produced (NonHamiltonian included), 1 internal error,
// 2 malformed input, a request above a size cap or a failed generator,
// 3 search budget exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "lham/construction.hpp"
#include "lham/error.hpp"
#include "lham/expansion.hpp"
#include "lham/harness.hpp"
#include "lham/io.hpp"
#include "lham/manifest.hpp"
#include "lham/repair.hpp"
#include "lham/rng.hpp"
#include "lham/solver.hpp"
#include "lham/structure.hpp"
#include "lham/witness.hpp"

namespace {

using nlohmann::json;
using namespace lham;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

constexpr std::uint64_t kDefaultSeed = 20240101;

using Clock = std::chrono::steady_clock;

struct Context {
  std::vector<std::string> argv;
  std::uint64_t seed = kDefaultSeed;
  Clock::time_point start = Clock::now();

  RunManifest manifest(const std::string& command) const {
    RunManifest m;
    m.command = command;
    m.arguments = argv;
    m.seed = seed;
    return m;
  }

  void finish(RunManifest& m, const std::string& path) const {
    m.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    write_manifest(m, path);
  }
};

std::string strip_json_suffix(const std::string& path) {
  const std::string suffix = ".json";
  if (path.size() > suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return path.substr(0, path.size() - suffix.size());
  }
  return path;
}

std::string codec_path_for(const std::string& graph_path) { return strip_json_suffix(graph_path) + ".codec.json"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_text(out_path, j.dump(2) + "\n");
  }
}

/// "600s", "250ms", "10m" or a bare number of seconds.
std::chrono::milliseconds parse_duration(const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::logic_error&) {
    throw InputError("bad duration '" + text + "'");
  }
  const std::string unit = text.substr(used);
  if (value < 0) throw InputError("negative duration '" + text + "'");
  if (unit.empty() || unit == "s") return std::chrono::seconds(value);
  if (unit == "ms") return std::chrono::milliseconds(value);
  if (unit == "m") return std::chrono::minutes(value);
  throw InputError("unknown duration unit in '" + text + "'");
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad vertex id '" + item + "'");
    }
  }
  return VertexSet(std::move(ids));
}

/// A G_E graph file with its codec sidecar, checked against a fresh rebuild.
struct LoadedConstruction {
  Construction construction;
  BaseGraph base;
};

LoadedConstruction load_construction(const std::string& graph_path, std::string codec_path) {
  if (codec_path.empty()) codec_path = codec_path_for(graph_path);
  const Graph g = read_graph_json_file(graph_path);
  const Codec codec = codec_from_json(read_json_file(codec_path));
  std::vector<Edge> base_edges;
  for (const Arc& a : codec.order().arcs()) {
    if (a.tail < a.head) base_edges.emplace_back(a.tail, a.head);
  }
  BaseGraph base(Graph::from_edges(codec.n_base(), codec.d(), base_edges));
  Construction rebuilt = build_construction(base, codec.order());
  if (!identical(rebuilt.graph, g)) {
    throw InputError("graph '" + graph_path + "' is not the construction described by '" + codec_path + "'");
  }
  return {std::move(rebuilt), std::move(base)};
}

struct TesterOptions {
  std::string name = "degree";
  std::string epsilon = "0.05";
  int radius = 2;
  int samples = -1;

  void attach(CLI::App* app) {
    app->add_option("--tester", name, "degree | ball | eager")->check(CLI::IsMember({"degree", "ball", "eager"}));
    app->add_option("--epsilon", epsilon, "proximity parameter, decimal or p/q");
    app->add_option("--radius", radius, "ball-explorer radius");
    app->add_option("--samples", samples, "sampled vertices (default ceil(2/epsilon))");
  }

  [[nodiscard]] TesterSpec make() const {
    const Rational eps = Rational::parse(epsilon);
    const std::optional<int> count = samples >= 0 ? std::optional<int>(samples) : std::nullopt;
    if (name == "degree") return degree_scanner(eps, count);
    if (name == "ball") return ball_explorer(eps, radius, count);
    return eager_rejector();
  }
};

json degree_histogram(const Graph& g) {
  std::map<int, int> counts;
  for (Vertex v = 0; v < g.n(); ++v) ++counts[g.degree(v)];
  json j = json::object();
  for (const auto& [deg, c] : counts) j[std::to_string(deg)] = c;
  return j;
}

json witness_json(const Witness& w) {
  return {{"kind", to_string(w.kind)},
          {"s", std::vector<Vertex>(w.s.begin(), w.s.end())},
          {"neighborhood", std::vector<Vertex>(w.neighborhood.begin(), w.neighborhood.end())}};
}

json expansion_json(const ExpansionReport& r) {
  return {{"h", r.h.str()}, {"cut_edges", r.cut_edges}, {"witness", std::vector<Vertex>(r.witness.begin(), r.witness.end())}};
}

int run(int argc, char** argv) {
  Context ctx;
  ctx.argv.assign(argv, argv + argc);

  CLI::App app{"Locally Hamiltonian, far-from-Hamiltonian graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed may follow the subcommand
  app.add_option("--seed", ctx.seed, "seed for every random choice")->capture_default_str();
  int exit_code = kExitOk;

  // build
  std::string base_spec;
  std::string order_spec = "lex";
  std::string out_path;
  auto* build = app.add_subcommand("build", "construct G_E and write graph, codec and manifest");
  build->add_option("--base", base_spec, "c3 | k4 | k5 | petersen | complete:n | random_regular:d:n:seed | file:path")
      ->required();
  build->add_option("--order", order_spec, "edge order: lex | random")->check(CLI::IsMember({"lex", "random"}));
  build->add_option("--out", out_path, "graph JSON path")->required();
  build->callback([&] {
    const BaseGraph base = make_base(base_spec);
    EdgeOrder order = EdgeOrder::lexicographic(base);
    if (order_spec == "random") {
      std::vector<Arc> arcs(order.arcs().begin(), order.arcs().end());
      Rng rng(ctx.seed);
      shuffle(arcs, rng);
      order = EdgeOrder(std::move(arcs));
    }
    const Construction c = build_construction(base, order);
    const std::string codec_path = codec_path_for(out_path);
    write_graph_json_file(c.graph, out_path);
    write_text(codec_path, codec_to_json(c.codec).dump() + "\n");
    RunManifest m = ctx.manifest("build");
    if (base_spec.rfind("file:", 0) == 0) m.add_input(base_spec.substr(5));
    m.outputs = {out_path, codec_path};
    ctx.finish(m, strip_json_suffix(out_path) + ".manifest.json");
    emit({{"vertices", c.graph.n()},
          {"edges", c.graph.edge_count()},
          {"max_degree", c.graph.max_degree()},
          {"degree_bound", c.graph.degree_bound()},
          {"graph", out_path},
          {"codec", codec_path}},
         "");
  });

  // inspect
  std::string graph_path;
  std::string codec_path;
  auto* inspect = app.add_subcommand("inspect", "summarise a graph file");
  inspect->add_option("graph", graph_path, "graph JSON")->required();
  inspect->add_option("--codec", codec_path, "codec sidecar; enables G_E checks");
  inspect->callback([&] {
    const Graph g = read_graph_json_file(graph_path);
    json j{{"vertices", g.n()},
           {"edges", g.edge_count()},
           {"degree_bound", g.degree_bound()},
           {"max_degree", g.max_degree()},
           {"min_degree", g.n() ? g.min_degree() : 0},
           {"degree_histogram", degree_histogram(g)}};
    if (!codec_path.empty()) {
      const LoadedConstruction lc = load_construction(graph_path, codec_path);
      const CycleCertificate master = master_cycle(lc.construction.codec);
      const Graph only_gadgets = induced_subgraph(g, VertexSet(master.order));
      j["master_cycle_length"] = master.order.size();
      j["master_cycle_valid"] = static_cast<bool>(verify_cycle_certificate(only_gadgets, master));
      j["base"] = {{"n", lc.base.n()}, {"d", lc.base.d()}};
      const auto k = construction_constants(lc.base.d());
      j["constants"] = {{"epsilon", k.epsilon.str()}, {"delta", k.delta.str()}, {"lambda", k.lambda.str()}};
    }
    emit(j, "");
  });

  // solve
  std::string budget_text;
  std::uint64_t max_nodes = 0;
  auto* solve = app.add_subcommand("solve", "decide Hamiltonicity exactly");
  solve->add_option("graph", graph_path, "graph JSON")->required();
  solve->add_option("--budget", budget_text, "wall-clock budget, e.g. 600s");
  solve->add_option("--max-nodes", max_nodes, "search-node budget");
  solve->add_option("--out", out_path, "result JSON path (stdout if absent)");
  solve->callback([&] {
    const Graph g = read_graph_json_file(graph_path);
    SolveBudget budget;
    if (!budget_text.empty()) budget.max_time = parse_duration(budget_text);
    if (max_nodes > 0) budget.max_nodes = max_nodes;
    const SolveResult r = find_hamiltonian_cycle(g, budget);
    emit(solve_result_to_json(r), out_path);
    if (!out_path.empty()) {
      RunManifest m = ctx.manifest("solve");
      m.add_input(graph_path);
      m.outputs = {out_path};
      ctx.finish(m, strip_json_suffix(out_path) + ".manifest.json");
    }
    if (r.status == SolveStatus::kBudgetExceeded) exit_code = kExitBudget;
  });

  // witness
  auto* witness = app.add_subcommand("witness", "list sound non-Hamiltonicity witnesses and the farness bound");
  witness->add_option("graph", graph_path, "graph JSON")->required();
  witness->callback([&] {
    const Graph g = read_graph_json_file(graph_path);
    const auto found = find_witnesses(g);
    json list = json::array();
    for (const Witness& w : found) list.push_back(witness_json(w));
    json j{{"witnesses", list}};
    if (g.n() > 0 && g.degree_bound() > 0) {
      const FarnessBound fb = farness_lower_bound(static_cast<std::int64_t>(found.size()), g.n(), g.degree_bound());
      j["min_modifications"] = fb.min_modifications;
      j["epsilon"] = fb.epsilon.str();
    }
    emit(j, "");
  });

  // distance
  int degree_bound = -1;
  int cap = 3;
  auto* distance = app.add_subcommand("distance", "exact distance to Hamiltonicity (at most 10 vertices)");
  distance->add_option("graph", graph_path, "graph JSON")->required();
  distance->add_option("--d", degree_bound, "degree bound after modification (default: the file's)");
  distance->add_option("--cap", cap, "largest modification set tried")->capture_default_str();
  distance->callback([&] {
    const Graph g = read_graph_json_file(graph_path);
    const auto dist = distance_to_hamiltonicity(g, degree_bound >= 0 ? degree_bound : g.degree_bound(), cap);
    emit({{"distance", dist ? json(*dist) : json(nullptr)}, {"cap", cap}}, "");
  });

  // expansion
  std::string expansion_base;
  auto* expansion = app.add_subcommand("expansion", "exact expansion ratio h(G)");
  expansion->add_option("--base", expansion_base, "base spec");
  expansion->add_option("graph", graph_path, "graph JSON");
  expansion->callback([&] {
    if (expansion_base.empty() == graph_path.empty()) throw InputError("give exactly one of --base or a graph file");
    const Graph g = expansion_base.empty() ? read_graph_json_file(graph_path) : make_base(expansion_base).graph();
    const ExpansionReport r = expansion_ratio(g);
    json j = expansion_json(r);
    j["passes_gate"] = r.h >= Rational(1);
    emit(j, "");
  });

  // repair
  std::string s_text;
  std::string out_prefix;
  auto* repair_cmd = app.add_subcommand("repair", "build the Hamiltonian repair H around a vertex set");
  repair_cmd->add_option("graph", graph_path, "G_E graph JSON")->required();
  repair_cmd->add_option("--codec", codec_path, "codec sidecar (default: <graph>.codec.json)");
  repair_cmd->add_option("--s", s_text, "comma-separated vertex ids")->required();
  repair_cmd->add_option("--out-prefix", out_prefix, "prefix for H, cycle and plan files (default: <graph>.repair)");
  repair_cmd->callback([&] {
    const LoadedConstruction lc = load_construction(graph_path, codec_path);
    const VerifiedExpander verified(lc.base);
    const VertexSet s = parse_vertex_list(s_text);
    const RepairResult r = repair(lc.construction, verified, s);
    const std::string prefix = out_prefix.empty() ? strip_json_suffix(graph_path) + ".repair" : out_prefix;
    const std::string h_path = prefix + ".h.json";
    const std::string cycle_path = prefix + ".cycle.json";
    const std::string plan_path = prefix + ".plan.json";
    write_graph_json_file(r.h, h_path);
    write_text(cycle_path, json(r.cycle.order).dump() + "\n");
    write_text(plan_path, repair_plan_to_json(r.plan, lc.construction.codec).dump(2) + "\n");
    RunManifest m = ctx.manifest("repair");
    m.add_input(graph_path);
    m.add_input(codec_path.empty() ? codec_path_for(graph_path) : codec_path);
    m.outputs = {h_path, cycle_path, plan_path};
    ctx.finish(m, prefix + ".manifest.json");
    emit({{"cycle_valid", static_cast<bool>(verify_cycle_certificate(r.h, r.cycle))},
          {"local_ham_certificate", local_ham_certificate(lc.construction.graph, r.h, s, r.cycle)},
          {"added_edges", r.plan.added_edges.size()},
          {"s_prime", std::vector<Vertex>(r.plan.s_prime.begin(), r.plan.s_prime.end())},
          {"h", h_path},
          {"cycle", cycle_path},
          {"plan", plan_path}},
         "");
  });

  // family
  std::string family_spec;
  int count = 3;
  std::string out_dir;
  auto* family_cmd = app.add_subcommand("family", "G_E over a stream of verified expanders");
  family_cmd->add_option("--spec", family_spec, "complete:<k> | random_regular:d:n:seed")->required();
  family_cmd->add_option("--count", count, "members to emit")->capture_default_str();
  family_cmd->add_option("--out-dir", out_dir, "write each member's graph and codec here");
  family_cmd->callback([&] {
    const FamilyResult fr = family(family_spec, count);
    RunManifest m = ctx.manifest("family");
    for (const FamilyMember& member : fr.members) {
      json line{{"base", member.base_spec},
                {"n_base", member.base.n()},
                {"d", member.base.d()},
                {"h", member.expansion.h.str()},
                {"vertices", member.construction.graph.n()}};
      if (!out_dir.empty()) {
        std::string stem = member.base_spec;
        std::replace(stem.begin(), stem.end(), ':', '_');
        const std::string g_path = out_dir + "/ge_" + stem + ".json";
        write_graph_json_file(member.construction.graph, g_path);
        write_text(codec_path_for(g_path), codec_to_json(member.construction.codec).dump() + "\n");
        m.outputs.push_back(g_path);
        m.outputs.push_back(codec_path_for(g_path));
        line["graph"] = g_path;
      }
      std::cout << line.dump() << '\n';
    }
    for (const FamilySkip& skip : fr.skipped) {
      std::cout << json{{"base", skip.base_spec}, {"skipped", skip.reason}}.dump() << '\n';
    }
    if (!out_dir.empty()) ctx.finish(m, out_dir + "/family.manifest.json");
  });

  // harness
  auto* harness = app.add_subcommand("harness", "oracle-model testers");
  harness->require_subcommand(1);
  harness->fallthrough();
  TesterOptions tester;
  std::size_t max_queries = 0;
  std::string trial_time;
  auto limits = [&] {
    TrialLimits l;
    if (max_queries > 0) l.max_queries = max_queries;
    if (!trial_time.empty()) l.max_time = parse_duration(trial_time);
    return l;
  };

  auto* harness_run = harness->add_subcommand("run", "run one tester once and print its transcript");
  harness_run->add_option("graph", graph_path, "graph JSON")->required();
  tester.attach(harness_run);
  harness_run->add_option("--max-queries", max_queries, "query budget (exhaustion forces accept)");
  harness_run->add_option("--trial-time", trial_time, "wall-clock guard per trial");
  harness_run->callback([&] {
    const Graph g = read_graph_json_file(graph_path);
    const Transcript t = run_tester(tester.make(), g, ctx.seed, limits());
    if (t.budget_exhausted) std::cerr << "budget exhausted; verdict forced to accept\n";
    emit(transcript_to_json(t), "");
  });

  auto* harness_replay = harness->add_subcommand("replay", "replay a tester on G_E and on its repair");
  harness_replay->add_option("graph", graph_path, "G_E graph JSON")->required();
  harness_replay->add_option("--codec", codec_path, "codec sidecar (default: <graph>.codec.json)");
  tester.attach(harness_replay);
  harness_replay->callback([&] {
    const LoadedConstruction lc = load_construction(graph_path, codec_path);
    const VerifiedExpander verified(lc.base);
    const ReplayReport r = replay_adversary(lc.construction, verified, tester.make(), ctx.seed);
    emit(replay_report_to_json(r), "");
  });

  std::vector<std::string> experiment_graphs;
  int trials = 200;
  auto* harness_exp = harness->add_subcommand("experiment", "acceptance rates over seeded trials (JSON lines)");
  harness_exp->add_option("graphs", experiment_graphs, "graph JSON files")->required();
  tester.attach(harness_exp);
  harness_exp->add_option("--trials", trials, "trials per graph")->capture_default_str();
  harness_exp->add_option("--out", out_path, "JSON-lines output (stdout if absent)");
  harness_exp->add_option("--trial-time", trial_time, "wall-clock guard per trial");
  harness_exp->callback([&] {
    std::vector<Graph> graphs;
    graphs.reserve(experiment_graphs.size());
    for (const auto& path : experiment_graphs) graphs.push_back(read_graph_json_file(path));
    std::vector<NamedGraph> named;
    for (std::size_t i = 0; i < graphs.size(); ++i) named.push_back({experiment_graphs[i], &graphs[i]});
    const auto stats = acceptance_experiment(named, tester.make(), trials, ctx.seed, limits());
    std::ostringstream lines;
    for (const ExperimentStats& s : stats) {
      for (const json& record : s.records) lines << record.dump() << '\n';
      const auto rate = s.acceptance_rate();
      std::cerr << s.graph << " " << s.tester << " acceptance " << (rate ? rate->str() : "n/a") << '\n';
    }
    if (out_path.empty()) {
      std::cout << lines.str();
    } else {
      write_text(out_path, lines.str());
      RunManifest m = ctx.manifest("harness experiment");
      for (const auto& path : experiment_graphs) m.add_input(path);
      m.outputs = {out_path};
      ctx.finish(m, strip_json_suffix(out_path) + ".manifest.json");
    }
  });

  // export-dot
  bool collapse = false;
  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  dot->add_option("graph", graph_path, "graph JSON")->required();
  dot->add_option("--codec", codec_path, "codec sidecar (needed for --collapse-gadgets)");
  dot->add_flag("--collapse-gadgets", collapse, "one node per gadget and per hub");
  dot->add_option("--out", out_path, "DOT path (stdout if absent)");
  dot->callback([&] {
    const Graph g = read_graph_json_file(graph_path);
    std::optional<Codec> codec;
    if (!codec_path.empty()) codec = codec_from_json(read_json_file(codec_path));
    DotOptions options;
    options.collapse_gadgets = collapse;
    std::ostringstream text;
    write_dot(text, g, options, codec ? &*codec : nullptr);
    if (out_path.empty()) {
      std::cout << text.str();
    } else {
      write_text(out_path, text.str());
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lham::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const lham::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const lham::Error& e) {
    // Size caps and exhausted generators: the request, not the program, is at fault.
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
