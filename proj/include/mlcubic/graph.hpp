#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlcubic/vertex_set.hpp"

namespace mlcubic {

/// Unordered vertex pair, stored with first < second.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when a graph would violate simplicity or the vertex range.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Connectivity is a queried property, not an invariant. Every "modifying"
/// member returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws GraphError on loops, repeated edges or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from symmetric adjacency rows; asymmetry or loops throw.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int size() const { return m_; }
  [[nodiscard]] const VertexSet& neighbors(int v) const { return adj_[v]; }
  [[nodiscard]] bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  [[nodiscard]] int degree(int v) const { return adj_[v].size(); }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::range(n_); }

  /// All edges in ascending (u, v) order.
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] Graph with_edge(int u, int v) const;
  [[nodiscard]] Graph without_edge(int u, int v) const;

  /// Relabels vertex v as perm[v].
  [[nodiscard]] Graph permuted(std::span<const int> perm) const;

  /// Disjoint union; other's vertices are shifted by order().
  [[nodiscard]] Graph disjoint_union(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Compact "n m / u v ..." text form used for gadget and fixture files.
std::string to_edge_list_text(const Graph& g);
Graph parse_edge_list_text(const std::string& text);

// Small named graphs used throughout tests and builders.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

}  // namespace mlcubic
