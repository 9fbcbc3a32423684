#include "lham/expansion.hpp"

#include <bit>
#include <random>
#include <set>
#include <vector>

#include "lham/error.hpp"
#include "lham/fixtures.hpp"
#include "lham/io.hpp"
#include "lham/rng.hpp"

namespace lham {
namespace {

// Lexicographic order of the sorted element lists of two bitmasks.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const std::uint32_t diff = a ^ b;
  const int t = std::countr_zero(diff);
  const std::uint32_t above = t == 31 ? 0u : ~((1u << (t + 1)) - 1u);
  if ((a >> t) & 1u) return (b & above) != 0;  // a continues with t, b with something larger or ends
  return (a & above) == 0;
}

VertexSet mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> ids;
  for (int v = 0; v < 32; ++v) {
    if ((mask >> v) & 1u) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(s, &used);
    if (used != s.size()) throw InputError("");
    return value;
  } catch (const std::exception&) {
    throw InputError("invalid integer for " + what + ": '" + s + "'");
  }
}

}  // namespace

ExpansionReport expansion_ratio(const Graph& g) {
  const int n = g.n();
  if (n > kExpansionVertexCap) {
    throw CapabilityError("exact expansion ratio is capped at " + std::to_string(kExpansionVertexCap) + " vertices");
  }
  if (n < 2) throw InputError("expansion ratio needs at least 2 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1u << w;
  }
  const int cap = n / 2;
  std::int64_t best_cut = -1;
  int best_size = 1;
  std::uint32_t best_mask = 0;
  std::uint32_t mask = 0;
  std::int64_t cut = 0;
  int size = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    const std::uint32_t bit = 1u << v;
    const auto deg = static_cast<std::int64_t>(g.degree(v));
    if (mask & bit) {
      mask &= ~bit;
      cut -= deg - 2 * std::popcount(adj[static_cast<std::size_t>(v)] & mask);
      --size;
    } else {
      cut += deg - 2 * std::popcount(adj[static_cast<std::size_t>(v)] & mask);
      mask |= bit;
      ++size;
    }
    if (size == 0 || size > cap) continue;
    if (best_cut < 0) {
      best_cut = cut;
      best_size = size;
      best_mask = mask;
      continue;
    }
    const std::int64_t lhs = cut * best_size;
    const std::int64_t rhs = best_cut * size;
    if (lhs < rhs || (lhs == rhs && lex_less(mask, best_mask))) {
      best_cut = cut;
      best_size = size;
      best_mask = mask;
    }
  }
  return {Rational(best_cut, best_size), best_cut, mask_to_set(best_mask)};
}

BaseGraph random_regular(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1) throw InputError("random_regular needs positive d and n");
  if ((static_cast<long>(d) * n) % 2 != 0) throw InputError("random_regular: d*n must be even");
  if (d >= n) throw InputError("random_regular: d must be smaller than n");
  Rng rng(seed);
  constexpr int kRetries = 100000;
  std::vector<int> points(static_cast<std::size_t>(d) * static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;
    shuffle(points, rng);
    std::set<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      const int a = points[i];
      const int b = points[i + 1];
      if (a == b || !edges.insert(Edge(a, b)).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Edge> list(edges.begin(), edges.end());
    return BaseGraph(Graph::from_edges(n, d, list));
  }
  throw GenerationError("random_regular: no simple pairing after " + std::to_string(kRetries) + " attempts");
}

BaseGraph make_base(const std::string& spec) {
  if (spec == "c3") return BaseGraph(fixtures::cycle(3));
  if (spec == "k4") return BaseGraph(fixtures::complete(4));
  if (spec == "k5") return BaseGraph(fixtures::complete(5));
  if (spec == "petersen") return BaseGraph(fixtures::petersen());
  if (spec.rfind("file:", 0) == 0) return BaseGraph(read_graph_json_file(spec.substr(5)));
  const auto parts = split(spec, ':');
  if (parts[0] == "complete" && parts.size() == 2) {
    const int n = parse_int(parts[1], "complete:n");
    if (n < 3) throw InputError("complete:n needs n >= 3");
    return BaseGraph(fixtures::complete(n));
  }
  if (parts[0] == "random_regular" && parts.size() == 4) {
    const int d = parse_int(parts[1], "d");
    const int n = parse_int(parts[2], "n");
    try {
      return random_regular(d, n, std::stoull(parts[3]));
    } catch (const std::logic_error&) {
      throw InputError("invalid seed '" + parts[3] + "'");
    }
  }
  throw InputError("unknown base spec '" + spec + "'");
}

VerifiedExpander::VerifiedExpander(BaseGraph base) : base_(std::move(base)), report_(expansion_ratio(base_.graph())) {
  if (report_.h < Rational(1)) {
    throw ExpansionError("base graph has expansion ratio " + report_.h.str() + " < 1");
  }
}

}  // namespace lham
