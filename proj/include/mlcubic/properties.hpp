#pragma once

#include <vector>

#include "mlcubic/graph.hpp"

namespace mlcubic {

struct DegreeProfile {
  std::vector<int> degrees;
  bool is_cubic = false;
  VertexSet degree2_vertices;
};

DegreeProfile degree_profile(const Graph& g);

/// Vertices reachable from `start` using only vertices of `allowed`.
/// `start` must be in `allowed`.
VertexSet reachable_within(const Graph& g, int start, const VertexSet& allowed);

/// Vertex sets of the components of g[allowed], ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed);

bool is_connected(const Graph& g);

/// Number of components of g - d; 0 when every vertex is deleted.
int components_after_deletion(const Graph& g, const VertexSet& d);

/// min(kappa(g), cap) for cap in {1, 2, 3}; 0 for disconnected graphs.
/// Complete graphs report n - 1 (capped).
int vertex_connectivity_capped(const Graph& g, int cap);

bool is_bipartite(const Graph& g);

/// Cut vertices of a connected graph (ascending).
VertexSet articulation_points(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  ///< new index -> original vertex
};

/// Vertices keep their relative order. Throws GraphError on an empty set.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

}  // namespace mlcubic
