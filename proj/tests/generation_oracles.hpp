#pragma once

// Generate-and-dedup references for the orderly generator. Labeled graphs are
// enumerated directly; classes are separated by cheap invariants and then by
// the isomorphism checker.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "mlcubic/graph.hpp"
#include "mlcubic/isomorphism.hpp"
#include "mlcubic/properties.hpp"

namespace oracle {

using mlcubic::Graph;

inline std::vector<long> invariant(const Graph& g) {
  std::vector<long> per_vertex;
  for (int v = 0; v < g.order(); ++v) {
    long tri = 0, second = 0;
    for (int a : g.neighbors(v)) {
      second += g.degree(a);
      for (int b : g.neighbors(v))
        if (a < b && g.adjacent(a, b)) ++tri;
    }
    per_vertex.push_back(g.degree(v) * 10000 + tri * 100 + second);
  }
  std::sort(per_vertex.begin(), per_vertex.end());
  per_vertex.push_back(static_cast<long>(mlcubic::components_within(g, g.vertices()).size()));
  return per_vertex;
}

class ClassCollector {
 public:
  void add(const Graph& g) {
    auto& bucket = buckets_[invariant(g)];
    for (const Graph& r : bucket)
      if (mlcubic::are_isomorphic(r, g)) return;
    bucket.push_back(g);
  }
  [[nodiscard]] std::vector<Graph> classes() const {
    std::vector<Graph> out;
    for (const auto& [k, b] : buckets_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

 private:
  std::map<std::vector<long>, std::vector<Graph>> buckets_;
};

// Every labeled cubic graph on n vertices in which vertex 0 is adjacent to
// 1, 2 and 3; each isomorphism class has at least one such labeling.
inline std::vector<Graph> connected_cubic_classes(int n) {
  ClassCollector classes;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<int> deg(n, 0);
  auto link = [&](int a, int b, bool on) {
    adj[a][b] = adj[b][a] = on;
    deg[a] += on ? 1 : -1;
    deg[b] += on ? 1 : -1;
  };
  for (int v = 1; v <= 3; ++v) link(0, v, true);
  // The lowest unsaturated vertex v takes partners above it in increasing
  // order, so each labeled graph is reached once.
  auto rec = [&](auto&& self, int v, int min_w) -> void {
    while (v < n && deg[v] == 3) {
      ++v;
      min_w = v + 1;
    }
    if (v == n) {
      std::vector<mlcubic::Edge> es;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (adj[a][b]) es.emplace_back(a, b);
      Graph g = Graph::from_edges(n, es);
      if (mlcubic::is_connected(g)) classes.add(g);
      return;
    }
    for (int w = std::max(min_w, v + 1); w < n; ++w) {
      if (deg[w] == 3 || adj[v][w]) continue;
      link(v, w, true);
      self(self, v, w + 1);
      link(v, w, false);
    }
  };
  rec(rec, 1, 2);
  return classes.classes();
}

// All labeled graphs on n vertices (n <= 7) with every degree in [lo, hi].
inline std::vector<Graph> classes_by_degree(int n, int lo, int hi) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  ClassCollector classes;
  const unsigned long total = 1ul << slots.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) ++deg[slots[i].first], ++deg[slots[i].second];
    if (std::any_of(deg.begin(), deg.end(), [&](int d) { return d < lo || d > hi; })) continue;
    std::vector<mlcubic::Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) es.emplace_back(slots[i].first, slots[i].second);
    classes.add(Graph::from_edges(n, es));
  }
  return classes.classes();
}

// Largest row-major upper-triangle adjacency string over all relabelings,
// as a vector of bits.
inline std::vector<bool> max_code_by_permutations(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code.push_back(g.adjacent(p[i], p[j]));
    if (code > best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::vector<bool> identity_code(const Graph& g) {
  std::vector<bool> code;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) code.push_back(g.adjacent(i, j));
  return code;
}

}  // namespace oracle
