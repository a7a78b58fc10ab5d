#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlcubic/graph.hpp"

namespace mlcubic {

/// Loop-free multigraph; parallel edges allowed. Input to edge expansions.
class MultiGraph {
 public:
  /// Throws GraphError on loops or out-of-range endpoints.
  MultiGraph(int n, std::vector<Edge> edges);

  static MultiGraph from_graph(const Graph& g);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  /// Degree counting parallel edges.
  [[nodiscard]] int degree(int v) const;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Two vertices joined by three parallel edges.
MultiGraph theta_multigraph();

enum class NamedGadget {
  PetersenMinusEdge,
  K4MinusEdge,
  K33MinusEdge,
  CubeMinusEdge,
  PetersenMinusVertex,
  SmallestJCell,
};

struct Gadget {
  NamedGadget name;
  Graph graph;
  std::vector<int> attach;  ///< the degree-deficient vertices, ascending
};

/// Labelings (also shipped as data/gadgets/<slug>.txt):
///   petersen-minus-edge    Petersen (outer cycle 0..4, spokes i--i+5, inner
///                          pentagram) minus edge 0--1; attach 0, 1
///   k4-minus-edge          K4 minus 0--1; attach 0, 1
///   k33-minus-edge         K3,3 on {0,1,2} | {3,4,5} minus 0--3; attach 0, 3
///   cube-minus-edge        Q3 on bit strings 0..7 minus 0--1; attach 0, 1
///   petersen-minus-vertex  Petersen minus vertex 0, shifted down; attach 0, 3, 4
///   smallest-jcell         a, b, c, d = 0, 1, 2, 3; inner 4..7 with paths
///                          c-4-a-5-b-6-d-7-c and chords 4--6, 5--7
Gadget named_graph(NamedGadget name);
/// Accepts the slugs above; throws std::invalid_argument otherwise.
Gadget named_graph(std::string_view slug);

std::string_view slug(NamedGadget name);
const std::vector<NamedGadget>& all_gadgets();

/// k copies of the edge-deleted Petersen graph on a cycle: copy i occupies
/// 10i..10i+9, and its attach[1] is joined to attach[0] of copy i+1 (mod k).
/// Throws std::invalid_argument for k < 3.
Graph cycle_of_edge_deleted_petersen(int k);

/// Replaces each vertex of s by a vertex-deleted Petersen graph. Unsubstituted
/// vertices come first (ascending), then one block of 9 per substituted vertex
/// (ascending). The ascending neighbours of a substituted vertex go to its
/// copy's attach vertices in ascending order. Throws std::invalid_argument
/// when h is not cubic or s is empty.
Graph substitute_p_star(const Graph& h, const VertexSet& s);

/// m smallest J-cells, copy i at 8i..8i+7, with edges b_i--a_{i+1} and
/// c_i--d_{i+1} (indices mod m). Throws std::invalid_argument for m < 2.
Graph jcell_ring(int m);

/// Replaces every edge u--v of h (in h's edge order) by a gadget copy joined
/// as u--attach[0] and attach[1]--v. Vertices of h keep their labels; copies
/// follow. Throws std::invalid_argument unless the gadget has two attach
/// vertices and h is cubic.
Graph edge_expansion(const MultiGraph& h, NamedGadget gadget);

}  // namespace mlcubic
