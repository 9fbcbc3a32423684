#include "lham/harness.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "lham/repair.hpp"
#include "lham/rng.hpp"
#include "lham/structure.hpp"
#include "lham/witness.hpp"

namespace lham {

Oracle::Oracle(const Graph& g, TrialLimits limits)
    : g_(&g), limits_(limits), start_(std::chrono::steady_clock::now()) {}

Vertex Oracle::query(Vertex v, int slot) {
  if (v < 0 || v >= g_->n()) throw InputError("oracle query for vertex " + std::to_string(v) + " out of range");
  if (slot < 1) throw InputError("oracle slots are 1-based");
  if (limits_.max_queries && log_.size() >= *limits_.max_queries) {
    throw QueryBudgetExhausted("query budget of " + std::to_string(*limits_.max_queries) + " spent");
  }
  if (limits_.max_time && std::chrono::steady_clock::now() - start_ > *limits_.max_time) {
    throw QueryBudgetExhausted("trial time limit reached");
  }
  const auto neighbours = g_->neighbors(v);
  const Vertex answer =
      static_cast<std::size_t>(slot) <= neighbours.size() ? neighbours[static_cast<std::size_t>(slot - 1)] : kNoNeighbour;
  log_.push_back({v, slot, answer});
  return answer;
}

std::string to_string(Verdict v) { return v == Verdict::kAccept ? "accept" : "reject"; }

std::string to_string(ReplayOutcome o) {
  switch (o) {
    case ReplayOutcome::kIdentical: return "identical";
    case ReplayOutcome::kMismatch: return "mismatch";
    case ReplayOutcome::kInapplicable: return "inapplicable";
    case ReplayOutcome::kNoQueries: return "no queries made";
  }
  return "unknown";
}

VertexSet Transcript::queried_vertices() const {
  std::vector<Vertex> ids;
  ids.reserve(queries.size());
  for (const Query& q : queries) ids.push_back(q.vertex);
  return VertexSet(std::move(ids));
}

std::size_t Transcript::distinct_vertices() const { return queried_vertices().size(); }

nlohmann::json transcript_to_json(const Transcript& t) {
  nlohmann::json queries = nlohmann::json::array();
  for (const Query& q : t.queries) {
    queries.push_back({q.vertex, q.slot, q.answer == kNoNeighbour ? nlohmann::json(nullptr) : nlohmann::json(q.answer)});
  }
  return {{"tester", t.tester},
          {"seed", t.seed},
          {"queries", std::move(queries)},
          {"verdict", to_string(t.verdict)},
          {"budget_exhausted", t.budget_exhausted}};
}

std::string serialize_transcript(const Transcript& t) { return transcript_to_json(t).dump(); }

Transcript run_tester(const TesterSpec& t, const Graph& g, std::uint64_t seed, const TrialLimits& limits) {
  Oracle oracle(g, limits);
  Transcript out;
  out.tester = t.name;
  out.seed = seed;
  try {
    out.verdict = t.run(g.n(), g.degree_bound(), seed, oracle);
  } catch (const QueryBudgetExhausted&) {
    // A one-sided tester may only reject on a witness; running out yields none.
    out.verdict = Verdict::kAccept;
    out.budget_exhausted = true;
  }
  out.queries = oracle.log();
  return out;
}

namespace {

int default_samples(const Rational& epsilon) {
  if (epsilon <= Rational(0)) throw InputError("epsilon must be positive");
  // ceil(2 / epsilon) = ceil(2 den / num)
  const std::int64_t num = epsilon.num();
  const std::int64_t twice_den = 2 * epsilon.den();
  return static_cast<int>((twice_den + num - 1) / num);
}

int sample_count(const Rational& epsilon, std::optional<int> samples) {
  if (samples) {
    if (*samples < 0) throw InputError("sample count must be non-negative");
    return *samples;
  }
  return default_samples(epsilon);
}

// What a tester has learned so far, in first-seen order.
class ExploredGraph {
 public:
  explicit ExploredGraph(Oracle& oracle) : oracle_(oracle) {}

  const std::vector<Vertex>& explore(Vertex v) {
    const std::size_t lv = local(v);
    if (!view_.explored[lv]) {
      view_.explored[lv] = true;
      fresh_.push_back(v);
      for (int slot = 1; slot <= oracle_.degree_bound(); ++slot) {
        const Vertex w = oracle_.query(v, slot);
        if (w == kNoNeighbour) break;
        const std::size_t lw = local(w);
        link(lv, lw);
      }
    }
    neighbours_.clear();
    for (Vertex lw : view_.adjacency[local(v)]) neighbours_.push_back(view_.global[static_cast<std::size_t>(lw)]);
    return neighbours_;
  }

  [[nodiscard]] const LocalView& view() const { return view_; }

  /// Vertices explored since the last call.
  std::vector<Vertex> take_fresh() { return std::exchange(fresh_, {}); }

 private:
  std::size_t local(Vertex v) {
    auto [it, inserted] = index_.try_emplace(v, view_.global.size());
    if (inserted) {
      view_.global.push_back(v);
      view_.adjacency.emplace_back();
      view_.explored.push_back(false);
    }
    return it->second;
  }

  void link(std::size_t a, std::size_t b) {
    auto& la = view_.adjacency[a];
    auto& lb = view_.adjacency[b];
    if (std::find(la.begin(), la.end(), static_cast<Vertex>(b)) == la.end()) la.push_back(static_cast<Vertex>(b));
    if (std::find(lb.begin(), lb.end(), static_cast<Vertex>(a)) == lb.end()) lb.push_back(static_cast<Vertex>(a));
  }

  Oracle& oracle_;
  LocalView view_;
  std::unordered_map<Vertex, std::size_t> index_;
  std::vector<Vertex> neighbours_;
  std::vector<Vertex> fresh_;
};

}  // namespace

TesterSpec degree_scanner(const Rational& epsilon, std::optional<int> samples) {
  const int count = sample_count(epsilon, samples);
  return {"degree-scanner", epsilon, [count](int n, int /*d*/, std::uint64_t seed, Oracle& oracle) {
            if (n == 0) return Verdict::kAccept;
            Rng rng(seed);
            for (int i = 0; i < count; ++i) {
              const auto v = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
              if (oracle.query(v, 1) == kNoNeighbour || oracle.query(v, 2) == kNoNeighbour) return Verdict::kReject;
            }
            return Verdict::kAccept;
          }};
}

TesterSpec ball_explorer(const Rational& epsilon, int radius, std::optional<int> samples) {
  if (radius < 0) throw InputError("ball radius must be non-negative");
  const int count = sample_count(epsilon, samples);
  return {"ball-explorer", epsilon, [count, radius](int n, int /*d*/, std::uint64_t seed, Oracle& oracle) {
            if (n == 0) return Verdict::kAccept;
            Rng rng(seed);
            ExploredGraph seen(oracle);
            for (int i = 0; i < count; ++i) {
              const auto root = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
              std::vector<std::pair<Vertex, int>> frontier{{root, 0}};
              std::unordered_map<Vertex, int> dist{{root, 0}};
              for (std::size_t k = 0; k < frontier.size(); ++k) {
                const auto [u, du] = frontier[k];
                const std::vector<Vertex> next = seen.explore(u);
                if (du == radius) continue;
                for (Vertex w : next) {
                  if (dist.try_emplace(w, du + 1).second) frontier.emplace_back(w, du + 1);
                }
              }
              // Earlier views held no witness, so only the new part needs a look.
              const std::vector<Vertex> fresh = seen.take_fresh();
              if (!fresh.empty() && !find_witnesses_in_view(seen.view(), n, fresh).empty()) return Verdict::kReject;
            }
            return Verdict::kAccept;
          }};
}

std::vector<TesterSpec> builtin_testers() {
  const Rational epsilon(1, 20);
  return {degree_scanner(epsilon), ball_explorer(epsilon, 2)};
}

TesterSpec eager_rejector() {
  return {"eager-rejector", Rational(1), [](int n, int /*d*/, std::uint64_t seed, Oracle& oracle) {
            if (n == 0) return Verdict::kReject;
            Rng rng(seed);
            oracle.query(static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n))), 1);
            return Verdict::kReject;
          }};
}

nlohmann::json replay_report_to_json(const ReplayReport& r) {
  nlohmann::json j{{"outcome", to_string(r.outcome)},
                   {"distinct_vertices", r.distinct_vertices},
                   {"queries", r.queries},
                   {"budget", r.budget.str()},
                   {"verdict_ge", to_string(r.verdict_ge)},
                   {"h_certified", r.h_certified}};
  j["verdict_h"] = r.verdict_h ? nlohmann::json(to_string(*r.verdict_h)) : nlohmann::json(nullptr);
  j["transcripts_identical"] = r.verdict_h.has_value() && r.transcript_ge == r.transcript_h;
  return j;
}

ReplayReport replay_adversary(const Construction& ge, const VerifiedExpander& base, const TesterSpec& t,
                              std::uint64_t seed, const TrialLimits& limits) {
  ReplayReport report;
  const Transcript on_ge = run_tester(t, ge.graph, seed, limits);
  const VertexSet s = on_ge.queried_vertices();
  report.distinct_vertices = s.size();
  report.queries = on_ge.queries.size();
  report.budget = construction_constants(base.base().d()).delta * Rational(ge.graph.n());
  report.verdict_ge = on_ge.verdict;
  report.transcript_ge = serialize_transcript(on_ge);
  if (s.empty()) {
    report.outcome = ReplayOutcome::kNoQueries;
    return report;
  }
  if (Rational(static_cast<std::int64_t>(s.size())) > report.budget) {
    report.outcome = ReplayOutcome::kInapplicable;
    return report;
  }
  const RepairResult repaired = repair(ge, base, s);
  report.h_certified = local_ham_certificate(ge.graph, repaired.h, s, repaired.cycle);
  const Transcript on_h = run_tester(t, repaired.h, seed, limits);
  report.verdict_h = on_h.verdict;
  report.transcript_h = serialize_transcript(on_h);
  report.outcome = report.transcript_ge == report.transcript_h && on_ge.verdict == on_h.verdict
                       ? ReplayOutcome::kIdentical
                       : ReplayOutcome::kMismatch;
  return report;
}

std::optional<Rational> ExperimentStats::acceptance_rate() const {
  if (trials == 0) return std::nullopt;
  return Rational(accepts, trials);
}

std::vector<ExperimentStats> acceptance_experiment(const std::vector<NamedGraph>& graphs, const TesterSpec& t,
                                                   int trials, std::uint64_t first_seed, const TrialLimits& limits) {
  if (trials < 0) throw InputError("trial count must be non-negative");
  std::vector<ExperimentStats> out;
  if (trials == 0) return out;
  for (const NamedGraph& g : graphs) {
    ExperimentStats stats{g.id, t.name, trials, 0, {}};
    for (int i = 0; i < trials; ++i) {
      const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
      const Transcript tr = run_tester(t, *g.graph, seed, limits);
      if (tr.verdict == Verdict::kAccept) ++stats.accepts;
      stats.records.push_back({{"graph", g.id},
                               {"tester", t.name},
                               {"seed", seed},
                               {"verdict", to_string(tr.verdict)},
                               {"distinct_vertices", tr.distinct_vertices()},
                               {"queries", tr.queries.size()}});
    }
    out.push_back(std::move(stats));
  }
  return out;
}

}  // namespace lham
