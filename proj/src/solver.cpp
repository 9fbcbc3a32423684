#include "lham/solver.hpp"

#include <algorithm>

#include "forcing.hpp"
#include "lham/error.hpp"

namespace lham {
namespace detail {

ForcingContext::ForcingContext(const Graph& g, const PropagationOptions& options)
    : n(g.n()),
      cycle_length(options.cycle_length > 0 ? options.cycle_length : g.n()),
      exclude_subtours(options.exclude_subtours),
      edges(g.edges()),
      incident(static_cast<std::size_t>(g.n())),
      open(static_cast<std::size_t>(g.n()), false) {
  if (!options.open.empty()) {
    if (options.open.size() != static_cast<std::size_t>(n)) throw InputError("open mask size does not match graph");
    std::copy(options.open.begin(), options.open.end(), open.begin());
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto idx = static_cast<int>(i);
    incident[static_cast<std::size_t>(edges[i].u)].push_back({edges[i].v, idx});
    incident[static_cast<std::size_t>(edges[i].v)].push_back({edges[i].u, idx});
  }
  for (auto& list : incident) {
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.other < b.other; });
  }
}

std::optional<int> ForcingContext::edge_between(Vertex a, Vertex b) const {
  for (const Incidence& inc : incident[static_cast<std::size_t>(a)]) {
    if (inc.other == b) return inc.edge;
  }
  return std::nullopt;
}

ForcingState::ForcingState(const ForcingContext& ctx)
    : ctx_(&ctx),
      status_(ctx.edges.size(), EdgeStatus::kFree),
      forced_deg_(static_cast<std::size_t>(ctx.n), 0),
      avail_deg_(static_cast<std::size_t>(ctx.n), 0),
      end_of_(static_cast<std::size_t>(ctx.n)),
      path_len_(static_cast<std::size_t>(ctx.n), 0),
      queued_(static_cast<std::size_t>(ctx.n), false) {
  for (Vertex v = 0; v < ctx.n; ++v) {
    avail_deg_[static_cast<std::size_t>(v)] = static_cast<int>(ctx.incident[static_cast<std::size_t>(v)].size());
    end_of_[static_cast<std::size_t>(v)] = v;
    touch(v);
  }
}

void ForcingState::fail(ContradictionKind kind, Vertex v) {
  if (!contradiction_) contradiction_ = Contradiction{kind, v};
}

void ForcingState::touch(Vertex v) {
  if (!queued_[static_cast<std::size_t>(v)]) {
    queued_[static_cast<std::size_t>(v)] = true;
    pending_.push_back(v);
  }
}

bool ForcingState::force(int edge) {
  auto& st = status_[static_cast<std::size_t>(edge)];
  if (st == EdgeStatus::kForced) return !failed();
  if (st == EdgeStatus::kExcluded) throw InvariantViolation("forcing an excluded edge");
  st = EdgeStatus::kForced;
  const Edge e = ctx_->edges[static_cast<std::size_t>(edge)];
  const auto u = static_cast<std::size_t>(e.u);
  const auto v = static_cast<std::size_t>(e.v);
  ++forced_deg_[u];
  ++forced_deg_[v];
  touch(e.u);
  touch(e.v);
  if (forced_deg_[u] > 2) fail(ContradictionKind::kOverForced, e.u);
  if (forced_deg_[v] > 2) fail(ContradictionKind::kOverForced, e.v);
  if (failed()) return false;

  const Vertex eu = end_of_[u];
  const Vertex ev = end_of_[v];
  if (eu == e.v) {
    const int length = path_len_[u] + 1;
    if (length < ctx_->cycle_length) {
      fail(ContradictionKind::kShortCycle, e.u);
      return false;
    }
    closed_ = true;
    return true;
  }
  const int length = path_len_[u] + path_len_[v] + 1;
  end_of_[static_cast<std::size_t>(eu)] = ev;
  end_of_[static_cast<std::size_t>(ev)] = eu;
  path_len_[static_cast<std::size_t>(eu)] = length;
  path_len_[static_cast<std::size_t>(ev)] = length;
  if (ctx_->exclude_subtours && length + 1 < ctx_->cycle_length) {
    if (auto closing = ctx_->edge_between(eu, ev);
        closing && status_[static_cast<std::size_t>(*closing)] == EdgeStatus::kFree) {
      return exclude(*closing);
    }
  }
  return true;
}

bool ForcingState::exclude(int edge) {
  auto& st = status_[static_cast<std::size_t>(edge)];
  if (st == EdgeStatus::kExcluded) return !failed();
  if (st == EdgeStatus::kForced) throw InvariantViolation("excluding a forced edge");
  st = EdgeStatus::kExcluded;
  const Edge e = ctx_->edges[static_cast<std::size_t>(edge)];
  --avail_deg_[static_cast<std::size_t>(e.u)];
  --avail_deg_[static_cast<std::size_t>(e.v)];
  touch(e.u);
  touch(e.v);
  return true;
}

bool ForcingState::propagate() {
  while (!pending_.empty() && !failed()) {
    const Vertex x = pending_.back();
    pending_.pop_back();
    queued_[static_cast<std::size_t>(x)] = false;
    const auto& inc = ctx_->incident[static_cast<std::size_t>(x)];
    if (forced_deg_[static_cast<std::size_t>(x)] == 2) {
      for (const Incidence& i : inc) {
        if (status_[static_cast<std::size_t>(i.edge)] == EdgeStatus::kFree) exclude(i.edge);
      }
    }
    if (ctx_->open[static_cast<std::size_t>(x)]) continue;
    const int avail = avail_deg_[static_cast<std::size_t>(x)];
    if (avail < 2) {
      fail(ContradictionKind::kStarved, x);
      break;
    }
    if (avail == 2) {
      for (const Incidence& i : inc) {
        if (status_[static_cast<std::size_t>(i.edge)] == EdgeStatus::kFree && !force(i.edge)) break;
      }
    }
  }
  return !failed();
}

bool ForcingState::available_graph_biconnected() const {
  const int n = ctx_->n;
  if (n < 3) return false;
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;
  int timer = 0;
  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, 0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& inc = ctx_->incident[static_cast<std::size_t>(f.v)];
    if (f.next < inc.size()) {
      const Incidence i = inc[f.next++];
      if (status_[static_cast<std::size_t>(i.edge)] == EdgeStatus::kExcluded || i.edge == f.parent_edge) continue;
      const auto w = static_cast<std::size_t>(i.other);
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        ++f.children;
        stack.push_back({i.other, i.edge, 0, 0});
      } else {
        low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    stack.pop_back();
    if (stack.empty()) {
      if (done.children > 1) return false;  // root with two DFS subtrees is a cut vertex
      break;
    }
    Frame& parent = stack.back();
    const auto pv = static_cast<std::size_t>(parent.v);
    low[pv] = std::min(low[pv], low[static_cast<std::size_t>(done.v)]);
    if (stack.size() > 1 && low[static_cast<std::size_t>(done.v)] >= disc[pv]) return false;
  }
  return timer == n;
}

CycleCertificate ForcingState::forced_cycle() const {
  CycleCertificate c;
  Vertex prev = -1;
  Vertex cur = 0;
  for (int step = 0; step < ctx_->n; ++step) {
    c.order.push_back(cur);
    Vertex next = -1;
    for (const Incidence& i : ctx_->incident[static_cast<std::size_t>(cur)]) {
      if (status_[static_cast<std::size_t>(i.edge)] == EdgeStatus::kForced && i.other != prev) {
        next = i.other;
        break;
      }
    }
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  return c;
}

ForcedState ForcingState::snapshot() const {
  ForcedState out;
  for (std::size_t i = 0; i < status_.size(); ++i) {
    if (status_[i] == EdgeStatus::kForced) out.forced.push_back(ctx_->edges[i]);
    if (status_[i] == EdgeStatus::kExcluded) out.excluded.push_back(ctx_->edges[i]);
  }
  out.contradiction = contradiction_;
  return out;
}

}  // namespace detail

std::string to_string(ContradictionKind k) {
  switch (k) {
    case ContradictionKind::kOverForced: return "over-forced";
    case ContradictionKind::kShortCycle: return "short-cycle";
    case ContradictionKind::kStarved: return "starved";
  }
  return "unknown";
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kCycle: return "Cycle";
    case SolveStatus::kNonHamiltonian: return "NonHamiltonian";
    case SolveStatus::kBudgetExceeded: return "BudgetExceeded";
  }
  return "unknown";
}

ForcedState propagate_forced(const Graph& g, const PropagationOptions& options) {
  const detail::ForcingContext ctx(g, options);
  detail::ForcingState state(ctx);
  state.propagate();
  return state.snapshot();
}

namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const detail::ForcingContext& ctx, const SolveBudget& budget) : ctx_(ctx), budget_(budget) {}

  bool run(detail::ForcingState state) {
    if (!tick()) return false;
    if (!state.propagate()) return false;
    if (state.closed()) {
      found_ = state.forced_cycle();
      return true;
    }
    if (!state.available_graph_biconnected()) return false;

    Vertex pick = -1;
    for (Vertex v = 0; v < ctx_.n; ++v) {
      if (state.forced_degree(v) >= 2) continue;
      if (pick == -1 || state.available_degree(v) < state.available_degree(pick)) pick = v;
    }
    if (pick == -1) return false;
    int edge = -1;
    for (const auto& inc : ctx_.incident[static_cast<std::size_t>(pick)]) {
      if (state.status(inc.edge) == detail::EdgeStatus::kFree) {
        edge = inc.edge;
        break;
      }
    }
    if (edge == -1) return false;

    detail::ForcingState with_edge = state;
    if (with_edge.force(edge) && run(std::move(with_edge))) return true;
    if (exhausted_) return false;
    if (!state.exclude(edge)) return false;
    return run(std::move(state));
  }

  [[nodiscard]] bool exhausted() const { return exhausted_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] const std::optional<CycleCertificate>& found() const { return found_; }

 private:
  bool tick() {
    if (exhausted_) return false;
    if (budget_.max_nodes && nodes_ >= *budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    if (budget_.max_time && (nodes_ & 255u) == 0 && Clock::now() - start_ > *budget_.max_time) exhausted_ = true;
    return !exhausted_;
  }

  const detail::ForcingContext& ctx_;
  SolveBudget budget_;
  Clock::time_point start_ = Clock::now();
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::optional<CycleCertificate> found_;
};

}  // namespace

SolveResult find_hamiltonian_cycle(const Graph& g, const SolveBudget& budget) {
  const auto start = Clock::now();
  SolveResult result;
  if (g.n() >= 3) {
    PropagationOptions options;
    options.exclude_subtours = true;
    const detail::ForcingContext ctx(g, options);
    Search search(ctx, budget);
    const bool found = search.run(detail::ForcingState(ctx));
    result.nodes_explored = search.nodes();
    if (found) {
      result.status = SolveStatus::kCycle;
      result.cycle = search.found();
      if (!verify_cycle_certificate(g, *result.cycle)) {
        throw InvariantViolation("solver produced a cycle that fails verification");
      }
    } else {
      result.status = search.exhausted() ? SolveStatus::kBudgetExceeded : SolveStatus::kNonHamiltonian;
    }
  }
  result.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return result;
}

nlohmann::json solve_result_to_json(const SolveResult& r) {
  nlohmann::json j{{"status", to_string(r.status)}, {"nodes_explored", r.nodes_explored}, {"wall_ms", r.wall_ms}};
  j["cycle"] = r.cycle ? r.cycle->order : std::vector<Vertex>{};
  return j;
}

}  // namespace lham
