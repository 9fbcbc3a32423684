#include "lham/repair.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "lham/error.hpp"
#include "lham/structure.hpp"

namespace lham {

namespace {

// Unit-capacity residual network solved by breadth-first augmentation.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  void add(int from, int to, int capacity) {
    auto& out = adj_[static_cast<std::size_t>(from)];
    auto& back = adj_[static_cast<std::size_t>(to)];
    out.push_back({to, capacity, static_cast<int>(back.size()), capacity});
    back.push_back({from, 0, static_cast<int>(out.size()) - 1, 0});
  }

  int max_flow(int source, int sink) {
    int total = 0;
    for (;;) {
      std::vector<std::pair<int, int>> parent(adj_.size(), {-1, -1});
      std::vector<int> queue{source};
      parent[static_cast<std::size_t>(source)] = {source, -1};
      for (std::size_t i = 0; i < queue.size() && parent[static_cast<std::size_t>(sink)].first == -1; ++i) {
        const int u = queue[i];
        const auto& out = adj_[static_cast<std::size_t>(u)];
        for (std::size_t k = 0; k < out.size(); ++k) {
          const auto& arc = out[k];
          if (arc.residual > 0 && parent[static_cast<std::size_t>(arc.to)].first == -1) {
            parent[static_cast<std::size_t>(arc.to)] = {u, static_cast<int>(k)};
            queue.push_back(arc.to);
          }
        }
      }
      if (parent[static_cast<std::size_t>(sink)].first == -1) return total;
      for (int v = sink; v != source;) {
        const auto [u, k] = parent[static_cast<std::size_t>(v)];
        auto& arc = adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
        --arc.residual;
        ++adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(arc.rev)].residual;
        v = u;
      }
      ++total;
    }
  }

  /// Flow on every original arc with positive flow, keyed by (from, to).
  [[nodiscard]] std::map<std::pair<int, int>, int> flows() const {
    std::map<std::pair<int, int>, int> out;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      for (const auto& arc : adj_[u]) {
        if (arc.capacity > 0 && arc.capacity > arc.residual) {
          out[{static_cast<int>(u), arc.to}] += arc.capacity - arc.residual;
        }
      }
    }
    return out;
  }

 private:
  struct FlowArc {
    int to;
    int residual;
    int rev;
    int capacity;
  };
  std::vector<std::vector<FlowArc>> adj_;
};

std::string path_text(const FeederPath& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "(") << p[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<FeederPath> find_feeder_paths(const BaseGraph& base, const VertexSet& s_prime) {
  const Graph& g = base.graph();
  const int n = g.n();
  s_prime.check_range(n);
  if (2 * s_prime.size() > static_cast<std::size_t>(n)) {
    throw InputError("feeder paths need |S'| <= n/2, got " + std::to_string(s_prime.size()) + " of " +
                     std::to_string(n));
  }
  if (s_prime.empty()) return {};

  const int source = n;
  const int sink = n + 1;
  FlowNetwork net(n + 2);
  for (Vertex u = 0; u < n; ++u) {
    if (s_prime.contains(u)) {
      net.add(u, sink, 1);
    } else {
      net.add(source, u, g.degree(u));
    }
  }
  for (const Edge& e : g.edges()) {
    const bool in_u = s_prime.contains(e.u);
    const bool in_v = s_prime.contains(e.v);
    if (in_u && in_v) {
      net.add(e.u, e.v, 1);
      net.add(e.v, e.u, 1);
    } else if (in_v) {
      net.add(e.u, e.v, 1);
    } else if (in_u) {
      net.add(e.v, e.u, 1);
    }
  }
  const int value = net.max_flow(source, sink);
  if (value != static_cast<int>(s_prime.size())) {
    throw InvariantViolation("feeder flow reaches only " + std::to_string(value) + " of " +
                             std::to_string(s_prime.size()) + " vertices of S'; the base expansion is below 1");
  }

  auto flow = net.flows();
  // Opposite units on one undirected edge cancel; the edge is then unused.
  for (auto& [key, units] : flow) {
    const auto rev = flow.find({key.second, key.first});
    if (units > 0 && rev != flow.end() && rev->second > 0) {
      const int common = std::min(units, rev->second);
      units -= common;
      rev->second -= common;
    }
  }

  std::vector<FeederPath> out;
  for (int round = 0; round < value; ++round) {
    FeederPath path;
    int cur = source;
    for (;;) {
      auto it = flow.lower_bound({cur, std::numeric_limits<int>::min()});
      while (it != flow.end() && it->first.first == cur && it->second == 0) ++it;
      if (it == flow.end() || it->first.first != cur) throw InvariantViolation("feeder flow is not conserved");
      --it->second;
      const int next = it->first.second;
      if (next == sink) break;
      // A revisit closes a circulation; drop it to keep the path simple.
      const auto seen = std::find(path.begin(), path.end(), next);
      if (seen != path.end()) path.erase(seen + 1, path.end());
      else path.push_back(next);
      cur = next;
    }
    out.push_back(std::move(path));
  }
  std::sort(out.begin(), out.end(), [](const FeederPath& a, const FeederPath& b) { return a.back() < b.back(); });
  validate_feeder_paths(base, s_prime, out);
  return out;
}

void validate_feeder_paths(const BaseGraph& base, const VertexSet& s_prime, const std::vector<FeederPath>& feeders) {
  const Graph& g = base.graph();
  if (feeders.size() != s_prime.size()) {
    throw InvariantViolation("expected " + std::to_string(s_prime.size()) + " feeders, got " +
                             std::to_string(feeders.size()));
  }
  std::set<Vertex> ends;
  std::set<Edge> used;
  for (const FeederPath& p : feeders) {
    if (p.size() < 2) throw InvariantViolation("feeder " + path_text(p) + " has fewer than two vertices");
    if (s_prime.contains(p.front())) throw InvariantViolation("feeder " + path_text(p) + " starts inside S'");
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (!s_prime.contains(p[i])) throw InvariantViolation("feeder " + path_text(p) + " leaves S'");
      if (!g.has_edge(p[i - 1], p[i])) throw InvariantViolation("feeder " + path_text(p) + " uses a non-edge");
      if (!used.insert(Edge(p[i - 1], p[i])).second) {
        throw InvariantViolation("feeder " + path_text(p) + " shares an edge with another feeder");
      }
    }
    if (std::set<Vertex>(p.begin(), p.end()).size() != p.size()) {
      throw InvariantViolation("feeder " + path_text(p) + " is not simple");
    }
    if (!ends.insert(p.back()).second) throw InvariantViolation("two feeders end at " + std::to_string(p.back()));
  }
}

namespace {

std::vector<Vertex> run(const Codec& codec, Arc arc, int from, int to) {
  std::vector<Vertex> out;
  const int step = from <= to ? 1 : -1;
  for (int i = from;; i += step) {
    out.push_back(codec.a(arc, i));
    if (i == to) break;
  }
  return out;
}

std::vector<Vertex> pick(const Codec& codec, Arc arc, std::initializer_list<int> indices) {
  std::vector<Vertex> out;
  for (int i : indices) out.push_back(codec.a(arc, i));
  return out;
}

void append(std::vector<Vertex>& to, const std::vector<Vertex>& from) { to.insert(to.end(), from.begin(), from.end()); }

std::vector<Vertex> hubs(const Codec& codec, Vertex v, std::initializer_list<int> indices) {
  std::vector<Vertex> out;
  for (int k : indices) out.push_back(codec.b(v, k));
  return out;
}

// (a1..a4, b3, b2, b1, a5..a12, b6, b5, b4, a13): the out-path prefix through the hub.
std::vector<Vertex> hub_detour(const Codec& codec, Arc arc, Vertex v) {
  std::vector<Vertex> p = run(codec, arc, 1, 4);
  append(p, hubs(codec, v, {3, 2, 1}));
  append(p, run(codec, arc, 5, 12));
  append(p, hubs(codec, v, {6, 5, 4}));
  p.push_back(codec.a(arc, 13));
  return p;
}

void fill_straight(const Codec& codec, const DiGraph& arcs, BlockPaths& paths) {
  for (const Arc& e : arcs.in_arcs(paths.v)) {
    if (!paths.in_paths.contains(e)) paths.in_paths[e] = run(codec, e, 18, kGadgetSize);
  }
  for (const Arc& e : arcs.out_arcs(paths.v)) {
    if (!paths.out_paths.contains(e)) paths.out_paths[e] = run(codec, e, 1, 17);
  }
}

}  // namespace

BlockPaths inner_block_paths(const Codec& codec, const DiGraph& arcs, Vertex v, const std::vector<Arc>& t_in,
                             const std::vector<Arc>& t_out, Vertex n_of_v) {
  if (t_in.size() != t_out.size() + 1) {
    throw InputError("block of " + std::to_string(v) + " needs |T_in| - 1 = |T_out|, got " +
                     std::to_string(t_in.size()) + " and " + std::to_string(t_out.size()));
  }
  const Arc chosen{v, n_of_v};
  const auto outs = arcs.out_arcs(v);
  if (std::find(outs.begin(), outs.end(), chosen) == outs.end()) {
    throw InputError("n(" + std::to_string(v) + ") = " + std::to_string(n_of_v) + " is not an out-neighbour");
  }
  if (std::find(t_out.begin(), t_out.end(), chosen) != t_out.end()) {
    throw InputError("n(" + std::to_string(v) + ") must not lie on an outgoing feeder arc");
  }
  std::vector<Arc> sources = t_in;
  std::vector<Arc> targets = t_out;
  targets.push_back(chosen);
  std::sort(sources.begin(), sources.end());
  std::sort(targets.begin(), targets.end());

  BlockPaths paths;
  paths.v = v;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const Arc e = sources[i];
    const Arc g = targets[i];
    std::vector<Vertex> in = run(codec, e, 20, 18);
    append(in, pick(codec, g, {8, 7, 6, 11, 10, 9}));
    append(in, pick(codec, e, {29, 28, 27, 30, 31}));
    paths.in_paths[e] = std::move(in);

    const std::vector<Vertex> side = pick(codec, e, {23, 22, 21, 26, 25, 24});
    std::vector<Vertex> out;
    if (g == chosen) {
      out = run(codec, g, 1, 5);
      append(out, hubs(codec, v, {1, 2, 3}));
      append(out, side);
      append(out, hubs(codec, v, {4, 5, 6}));
      append(out, run(codec, g, 12, 17));
    } else {
      out = pick(codec, g, {1, 2, 5, 4, 3});
      append(out, side);
      append(out, pick(codec, g, {14, 13, 12, 17, 16, 15}));
    }
    paths.out_paths[g] = std::move(out);
  }
  fill_straight(codec, arcs, paths);
  return paths;
}

BlockPaths outer_block_paths(const Codec& codec, const DiGraph& arcs, Vertex v,
                             const std::vector<FeederPath>& feeders, Vertex n_of_v) {
  const Arc chosen{v, n_of_v};
  BlockPaths paths;
  paths.v = v;
  for (const FeederPath& q : feeders) {
    if (q.size() < 2 || q.front() != v) continue;
    const Arc e{q[0], q[1]};
    std::vector<Vertex> out = e == chosen ? hub_detour(codec, e, v) : run(codec, e, 1, 13);
    append(out, pick(codec, e, {14, 17, 16, 15}));
    paths.out_paths[e] = std::move(out);
  }
  if (!paths.out_paths.contains(chosen)) {
    std::vector<Vertex> out = hub_detour(codec, chosen, v);
    append(out, run(codec, chosen, 14, 17));
    paths.out_paths[chosen] = std::move(out);
  }
  fill_straight(codec, arcs, paths);
  return paths;
}

void validate_block_paths(const Codec& codec, const DiGraph& arcs, const BlockPaths& paths) {
  std::vector<Vertex> covered;
  for (const auto* side : {&paths.in_paths, &paths.out_paths}) {
    for (const auto& [arc, path] : *side) covered.insert(covered.end(), path.begin(), path.end());
  }
  const std::size_t total = covered.size();
  const VertexSet as_set(std::move(covered));
  if (as_set.size() != total) {
    throw InvariantViolation("block paths at " + std::to_string(paths.v) + " are not vertex-disjoint");
  }
  if (as_set != half_block(codec, arcs, paths.v)) {
    throw InvariantViolation("block paths at " + std::to_string(paths.v) + " do not cover the block exactly");
  }
}

RepairResult repair(const Construction& ge, const VerifiedExpander& verified, const VertexSet& s) {
  const BaseGraph& base = verified.base();
  const Codec& codec = ge.codec;
  if (codec.n_base() != base.n() || codec.d() != base.d() || ge.graph.n() != codec.vertex_count()) {
    throw InputError("construction does not belong to the given base graph");
  }
  if (s.empty()) throw InputError("repair needs a nonempty vertex set");
  s.check_range(ge.graph.n());
  const Rational delta = construction_constants(base.d()).delta;
  if (Rational(static_cast<std::int64_t>(s.size())) > delta * Rational(ge.graph.n())) {
    throw InputError("|S| = " + std::to_string(s.size()) + " exceeds delta*|V| = " +
                     (delta * Rational(ge.graph.n())).str());
  }

  const DiGraph arcs = DiGraph::double_of(base.graph());
  RepairResult out;
  RepairPlan& plan = out.plan;
  {
    std::vector<Vertex> blocks;
    for (Vertex x : s) blocks.push_back(codec.block_of(x));
    plan.s_prime = VertexSet(std::move(blocks));
  }
  plan.feeders = find_feeder_paths(base, plan.s_prime);
  for (Vertex v : plan.s_prime) {
    plan.t_in[v];
    plan.t_out[v];
  }
  for (const FeederPath& q : plan.feeders) {
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
      const Arc e{q[j], q[j + 1]};
      plan.t_in[e.head].push_back(e);
      if (j > 0) plan.t_out[e.tail].push_back(e);
    }
  }
  for (auto* sets : {&plan.t_in, &plan.t_out}) {
    for (auto& [v, list] : *sets) std::sort(list.begin(), list.end());
  }

  for (Vertex v = 0; v < base.n(); ++v) {
    const auto& avoid = plan.s_prime.contains(v) ? plan.t_out[v] : std::vector<Arc>{};
    std::optional<Vertex> best;
    for (Vertex w : base.graph().neighbors(v)) {
      if (std::find(avoid.begin(), avoid.end(), Arc{v, w}) != avoid.end()) continue;
      if (!best || w < *best) best = w;
    }
    if (!best) throw InvariantViolation("no admissible out-neighbour for " + std::to_string(v));
    plan.n_of[v] = *best;
  }

  for (Vertex v = 0; v < base.n(); ++v) {
    if (plan.s_prime.contains(v)) continue;
    const Arc chosen{v, plan.n_of[v]};
    plan.added_edges.emplace_back(codec.b(v, 3), codec.a(chosen, 4));
    plan.added_edges.emplace_back(codec.b(v, 4), codec.a(chosen, 13));
  }
  for (const FeederPath& q : plan.feeders) {
    const Arc first{q[0], q[1]};
    plan.added_edges.emplace_back(codec.a(first, 14), codec.a(first, 17));
  }
  for (const Edge& e : plan.added_edges) {
    if (plan.s_prime.contains(codec.block_of(e.u)) || plan.s_prime.contains(codec.block_of(e.v))) {
      throw InvariantViolation("an added edge touches a block of S'");
    }
  }
  out.h = ge.graph.with_added_edges(plan.added_edges, base.d() + 3);

  std::map<Arc, std::vector<Vertex>> in_paths;
  std::map<Arc, std::vector<Vertex>> out_paths;
  for (Vertex v = 0; v < base.n(); ++v) {
    BlockPaths block = plan.s_prime.contains(v)
                           ? inner_block_paths(codec, arcs, v, plan.t_in[v], plan.t_out[v], plan.n_of[v])
                           : outer_block_paths(codec, arcs, v, plan.feeders, plan.n_of[v]);
    validate_block_paths(codec, arcs, block);
    in_paths.merge(block.in_paths);
    out_paths.merge(block.out_paths);
  }
  for (const Arc& e : codec.order().arcs()) {
    const auto& first = out_paths.at(e);
    const auto& second = in_paths.at(e);
    if (!out.h.has_edge(first.back(), second.front())) {
      throw InvariantViolation("junction of gadget (" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                               ") is not an edge");
    }
    append(out.cycle.order, first);
    append(out.cycle.order, second);
  }
  if (const CycleCheck check = verify_cycle_certificate(out.h, out.cycle); !check) {
    throw InvariantViolation("repair cycle fails verification: " + to_string(check.defect) + " at position " +
                             std::to_string(check.position));
  }
  if (!local_ham_certificate(ge.graph, out.h, s, out.cycle)) {
    throw InvariantViolation("repaired graph differs from G_E around S");
  }
  return out;
}

bool local_ham_certificate(const Graph& ge, const Graph& h, const VertexSet& s, const CycleCertificate& cycle) {
  if (ge.n() != h.n()) return false;
  if (!verify_cycle_certificate(h, cycle)) return false;
  for (Vertex v : s) {
    if (v < 0 || v >= ge.n()) return false;
  }
  const VertexSet hood = closed_neighborhood(ge, s);
  if (hood != closed_neighborhood(h, s)) return false;
  for (Vertex u : hood) {
    for (Vertex w : ge.neighbors(u)) {
      if (hood.contains(w) && !h.has_edge(u, w)) return false;
    }
    for (Vertex w : h.neighbors(u)) {
      if (hood.contains(w) && !ge.has_edge(u, w)) return false;
    }
  }
  return true;
}

namespace {

std::string slot_name(const Codec& codec, Vertex id) {
  const VertexName name = codec.name(id);
  if (const auto* g = std::get_if<GadgetSlot>(&name)) {
    return "a" + std::to_string(g->index) + "(" + std::to_string(g->arc.tail) + "," + std::to_string(g->arc.head) +
           ")";
  }
  const auto& hub = std::get<HubSlot>(name);
  return "b" + std::to_string(hub.index) + "(" + std::to_string(hub.base) + ")";
}

nlohmann::json arcs_json(const std::vector<Arc>& list) {
  nlohmann::json out = nlohmann::json::array();
  for (const Arc& a : list) out.push_back({a.tail, a.head});
  return out;
}

}  // namespace

nlohmann::json repair_plan_to_json(const RepairPlan& plan, const Codec& codec) {
  nlohmann::json j;
  j["s_prime"] = std::vector<Vertex>(plan.s_prime.begin(), plan.s_prime.end());
  j["feeders"] = plan.feeders;
  j["n_of"] = nlohmann::json::object();
  for (const auto& [v, w] : plan.n_of) j["n_of"][std::to_string(v)] = w;
  j["added_edges"] = nlohmann::json::array();
  for (const Edge& e : plan.added_edges) {
    j["added_edges"].push_back({{"ids", {e.u, e.v}}, {"names", {slot_name(codec, e.u), slot_name(codec, e.v)}}});
  }
  j["t_in"] = nlohmann::json::object();
  j["t_out"] = nlohmann::json::object();
  for (const auto& [v, list] : plan.t_in) j["t_in"][std::to_string(v)] = arcs_json(list);
  for (const auto& [v, list] : plan.t_out) j["t_out"][std::to_string(v)] = arcs_json(list);
  return j;
}

FamilyResult family(const std::string& spec, int count) {
  if (count < 0) throw InputError("family count must be non-negative");
  FamilyResult out;
  std::vector<std::string> candidates;
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  try {
    if (kind == "complete" && colon != std::string::npos) {
      const int start = std::stoi(spec.substr(colon + 1));
      for (int k = std::max(start, 3); k <= kExpansionVertexCap; ++k) candidates.push_back("complete:" + std::to_string(k));
    } else if (kind == "random_regular") {
      const auto second = spec.find(':', colon + 1);
      const auto third = spec.find(':', second + 1);
      if (second == std::string::npos || third == std::string::npos) throw InputError("bad family spec '" + spec + "'");
      const int d = std::stoi(spec.substr(colon + 1, second - colon - 1));
      const int n = std::stoi(spec.substr(second + 1, third - second - 1));
      const std::string seed = spec.substr(third + 1);
      for (int k = std::max(n, d + 1); k <= kExpansionVertexCap; ++k) {
        if ((d * k) % 2 == 0) {
          candidates.push_back("random_regular:" + std::to_string(d) + ":" + std::to_string(k) + ":" + seed);
        }
      }
    } else {
      throw InputError("family spec must be complete:<k> or random_regular:d:n:seed, got '" + spec + "'");
    }
  } catch (const std::logic_error&) {
    throw InputError("malformed family spec '" + spec + "'");
  }
  for (const std::string& candidate : candidates) {
    if (static_cast<int>(out.members.size()) >= count) break;
    try {
      VerifiedExpander verified(make_base(candidate));
      Construction c = build_construction(verified.base());
      out.members.push_back({candidate, verified.base(), verified.report(), std::move(c)});
    } catch (const Error& e) {
      out.skipped.push_back({candidate, e.what()});
    }
  }
  return out;
}

}  // namespace lham
