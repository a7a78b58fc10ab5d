#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mlcubic/graph.hpp"
#include "mlcubic/properties.hpp"

namespace testgen {

using mlcubic::Edge;
using mlcubic::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Random spanning tree (random attachment) plus `extra` random chords.
inline Graph random_connected_graph(int n, int extra, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(order[i], order[pick(rng)]);
  }
  std::uniform_int_distribution<int> vert(0, n - 1);
  int max_edges = n * (n - 1) / 2;
  for (int tries = 0; tries < 20 * extra && static_cast<int>(edges.size()) < std::min(n - 1 + extra, max_edges);
       ++tries) {
    int u = vert(rng);
    int v = vert(rng);
    if (u == v) continue;
    Edge e(u, v);
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Graph::from_edges(n, edges);
}

// Configuration model with rejection of loops and multi-edges.
inline Graph random_cubic(int n, std::mt19937_64& rng) {
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      int u = points[i];
      int v = points[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      Edge e(u, v);
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) ok = false;
      edges.push_back(e);
    }
    if (ok) return Graph::from_edges(n, edges);
  }
}

inline Graph random_connected_cubic(int n, int min_conn, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_cubic(n, rng);
    if (mlcubic::vertex_connectivity_capped(g, 3) >= min_conn) return g;
  }
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace testgen
