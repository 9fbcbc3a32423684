#include "lham/fixtures.hpp"

#include <vector>

#include "lham/error.hpp"

namespace lham::fixtures {

Graph path(int n, int degree_bound) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, degree_bound, edges);
}

Graph cycle(int n, int degree_bound) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, degree_bound, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, n - 1, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, 3, edges);
}

Graph caterpillar(int k, int degree_bound) {
  if (k < 1) throw InputError("caterpillar needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < k; ++i) edges.emplace_back(i, k + i);
  return Graph::from_edges(2 * k, degree_bound, edges);
}

Graph c4_ring(int k, int degree_bound) {
  if (k < 2) throw InputError("c4 ring needs k >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    const int base = 4 * i;
    for (int j = 0; j < 4; ++j) edges.emplace_back(base + j, base + (j + 1) % 4);
    edges.emplace_back(base + 2, 4 * ((i + 1) % k));
  }
  return Graph::from_edges(4 * k, degree_bound, edges);
}

Graph two_triangles(int degree_bound) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return Graph::from_edges(6, degree_bound, edges);
}

}  // namespace lham::fixtures
