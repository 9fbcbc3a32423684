#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lham/construction.hpp"
#include "lham/error.hpp"
#include "lham/expansion.hpp"
#include "lham/graph.hpp"
#include "lham/rational.hpp"

namespace lham {

/// Answer for a slot beyond the vertex's degree.
inline constexpr Vertex kNoNeighbour = -1;

struct Query {
  Vertex vertex = 0;
  int slot = 1;  // 1-based
  Vertex answer = kNoNeighbour;
  friend bool operator==(const Query&, const Query&) = default;
};

/// Raised by the oracle once its query or time allowance is spent.
class QueryBudgetExhausted : public CapabilityError {
 public:
  using CapabilityError::CapabilityError;
};

struct TrialLimits {
  std::optional<std::size_t> max_queries;
  std::optional<std::chrono::milliseconds> max_time;  // engineering guard only
};

/// Bounded-degree adjacency oracle: (v, j) -> j-th neighbour of v or kNoNeighbour.
class Oracle {
 public:
  explicit Oracle(const Graph& g, TrialLimits limits = {});

  [[nodiscard]] int n() const { return g_->n(); }
  [[nodiscard]] int degree_bound() const { return g_->degree_bound(); }

  /// Throws InputError for an id outside [0, n) or a slot < 1, and
  /// QueryBudgetExhausted when the limits are spent.
  Vertex query(Vertex v, int slot);

  [[nodiscard]] const std::vector<Query>& log() const { return log_; }

 private:
  const Graph* g_;
  TrialLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Query> log_;
};

enum class Verdict { kAccept, kReject };

std::string to_string(Verdict v);

struct TesterSpec {
  std::string name;
  Rational epsilon;
  /// Deterministic in (oracle answers, seed).
  std::function<Verdict(int n, int d, std::uint64_t seed, Oracle& oracle)> run;
};

struct Transcript {
  std::string tester;
  std::uint64_t seed = 0;
  std::vector<Query> queries;
  Verdict verdict = Verdict::kAccept;
  bool budget_exhausted = false;  // verdict was forced to accept

  [[nodiscard]] std::size_t distinct_vertices() const;
  [[nodiscard]] VertexSet queried_vertices() const;
};

/// {"tester", "seed", "queries": [[v, slot, answer|null], ...], "verdict", "budget_exhausted"}.
nlohmann::json transcript_to_json(const Transcript& t);
/// Canonical byte form used for replay comparison.
std::string serialize_transcript(const Transcript& t);

/// Runs the tester on a fresh oracle. Exhausted limits force an accept.
Transcript run_tester(const TesterSpec& t, const Graph& g, std::uint64_t seed, const TrialLimits& limits = {});

/// Samples ceil(2/epsilon) vertices (or `samples`) with replacement and queries
/// slots 1 and 2; rejects iff one has degree <= 1.
TesterSpec degree_scanner(const Rational& epsilon, std::optional<int> samples = std::nullopt);

/// Samples vertices as above and fully queries every vertex within `radius`;
/// rejects iff find_witnesses_in_view reports a witness in what it has seen.
TesterSpec ball_explorer(const Rational& epsilon, int radius, std::optional<int> samples = std::nullopt);

/// degree-scanner and ball-explorer (radius 2), both at epsilon = 1/20.
std::vector<TesterSpec> builtin_testers();

/// Queries slot 1 of one sampled vertex and rejects regardless. Not one-sided;
/// exists to show what the replay adversary exposes.
TesterSpec eager_rejector();

enum class ReplayOutcome { kIdentical, kMismatch, kInapplicable, kNoQueries };

std::string to_string(ReplayOutcome o);

struct ReplayReport {
  ReplayOutcome outcome = ReplayOutcome::kNoQueries;
  std::size_t distinct_vertices = 0;
  std::size_t queries = 0;
  Rational budget;  // delta * |V(G_E)|
  Verdict verdict_ge = Verdict::kAccept;
  std::optional<Verdict> verdict_h;
  bool h_certified = false;  // H carries a validated Hamiltonian cycle
  std::string transcript_ge;
  std::string transcript_h;
};

nlohmann::json replay_report_to_json(const ReplayReport& r);

/// Runs t on G_E, repairs around the queried vertex set S, reruns t with the
/// same seed on H and compares transcripts byte for byte. |S| above the
/// delta budget is inapplicable; no queries at all is reported as such.
ReplayReport replay_adversary(const Construction& ge, const VerifiedExpander& base, const TesterSpec& t,
                              std::uint64_t seed, const TrialLimits& limits = {});

struct NamedGraph {
  std::string id;
  const Graph* graph;
};

struct ExperimentStats {
  std::string graph;
  std::string tester;
  int trials = 0;
  int accepts = 0;
  std::vector<nlohmann::json> records;  // one JSON line per trial

  /// accepts / trials; nullopt for zero trials.
  [[nodiscard]] std::optional<Rational> acceptance_rate() const;
};

/// Seeds first_seed, first_seed + 1, ... for each graph.
std::vector<ExperimentStats> acceptance_experiment(const std::vector<NamedGraph>& graphs, const TesterSpec& t,
                                                   int trials, std::uint64_t first_seed = 0,
                                                   const TrialLimits& limits = {});

}  // namespace lham
