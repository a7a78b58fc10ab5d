#include "mlcubic/properties.hpp"

#include <stdexcept>

namespace mlcubic {

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  p.is_cubic = true;
  for (int v = 0; v < g.order(); ++v) {
    p.degrees[v] = g.degree(v);
    if (p.degrees[v] != 3) p.is_cubic = false;
    if (p.degrees[v] == 2) p.degree2_vertices.insert(v);
  }
  return p;
}

VertexSet reachable_within(const Graph& g, int start, const VertexSet& allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed) {
  std::vector<VertexSet> out;
  VertexSet left = allowed;
  while (!left.empty()) {
    VertexSet c = reachable_within(g, left.first(), allowed);
    out.push_back(c);
    left -= c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable_within(g, 0, g.vertices()).size() == g.order();
}

int components_after_deletion(const Graph& g, const VertexSet& d) {
  return static_cast<int>(components_within(g, g.vertices() - d).size());
}

int vertex_connectivity_capped(const Graph& g, int cap) {
  if (cap < 1 || cap > 3) throw std::invalid_argument("connectivity cap must be 1, 2 or 3");
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return 0;
  int best = std::min(cap, n - 1);
  const VertexSet all = g.vertices();
  auto separates = [&](const VertexSet& d) {
    VertexSet rest = all - d;
    return reachable_within(g, rest.first(), rest) != rest;
  };
  if (best >= 2) {
    for (int v = 0; v < n; ++v) {
      if (separates(VertexSet::single(v))) return 1;
    }
  }
  if (best >= 3) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (separates(VertexSet{u, v})) return 2;
      }
    }
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

VertexSet articulation_points(const Graph& g) {
  VertexSet out;
  const VertexSet all = g.vertices();
  const int base = static_cast<int>(components_within(g, all).size());
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = all;
    rest.erase(v);
    if (static_cast<int>(components_within(g, rest).size()) > base) out.insert(v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw GraphError("induced subgraph of an empty vertex set");
  InducedSubgraph out;
  out.to_original = x.to_vector();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) index[out.to_original[i]] = static_cast<int>(i);
  std::vector<VertexSet> rows(out.to_original.size());
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    for (int w : g.neighbors(out.to_original[i]) & x) rows[i].insert(index[w]);
  }
  out.graph = Graph::from_adjacency(std::move(rows));
  return out;
}

}  // namespace mlcubic
