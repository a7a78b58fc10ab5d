#include "mlcubic/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "mlcubic/properties.hpp"

namespace mlcubic {

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) throw GraphError("multigraph order out of range");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) throw GraphError("multigraph edge out of range");
    if (e.u == e.v) throw GraphError("multigraph loops are not allowed");
  }
}

MultiGraph MultiGraph::from_graph(const Graph& g) { return MultiGraph(g.order(), g.edges()); }

int MultiGraph::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

MultiGraph theta_multigraph() { return MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

namespace {

Graph cube_graph() {
  std::vector<Edge> es;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) es.emplace_back(v, v ^ bit);
  return Graph::from_edges(8, es);
}

Graph petersen_minus_vertex() {
  Graph p = petersen_graph();
  std::vector<Edge> es;
  for (const Edge& e : p.edges())
    if (e.u != 0) es.emplace_back(e.u - 1, e.v - 1);
  return Graph::from_edges(9, es);
}

std::vector<int> deficient_vertices(const Graph& g) {
  int top = 0;
  for (int v = 0; v < g.order(); ++v) top = std::max(top, g.degree(v));
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < top) out.push_back(v);
  return out;
}

struct Entry {
  NamedGadget name;
  std::string_view slug;
};

constexpr Entry kEntries[] = {
    {NamedGadget::PetersenMinusEdge, "petersen-minus-edge"},
    {NamedGadget::K4MinusEdge, "k4-minus-edge"},
    {NamedGadget::K33MinusEdge, "k33-minus-edge"},
    {NamedGadget::CubeMinusEdge, "cube-minus-edge"},
    {NamedGadget::PetersenMinusVertex, "petersen-minus-vertex"},
    {NamedGadget::SmallestJCell, "smallest-jcell"},
};

}  // namespace

std::string_view slug(NamedGadget name) {
  for (const Entry& e : kEntries)
    if (e.name == name) return e.slug;
  return "?";
}

const std::vector<NamedGadget>& all_gadgets() {
  static const std::vector<NamedGadget> all = [] {
    std::vector<NamedGadget> v;
    for (const Entry& e : kEntries) v.push_back(e.name);
    return v;
  }();
  return all;
}

Gadget named_graph(NamedGadget name) {
  Graph g;
  switch (name) {
    case NamedGadget::PetersenMinusEdge:
      g = petersen_graph().without_edge(0, 1);
      break;
    case NamedGadget::K4MinusEdge:
      g = complete_graph(4).without_edge(0, 1);
      break;
    case NamedGadget::K33MinusEdge:
      g = complete_bipartite(3, 3).without_edge(0, 3);
      break;
    case NamedGadget::CubeMinusEdge:
      g = cube_graph().without_edge(0, 1);
      break;
    case NamedGadget::PetersenMinusVertex:
      g = petersen_minus_vertex();
      break;
    case NamedGadget::SmallestJCell:
      g = Graph::from_edges(8, {{2, 4}, {0, 4}, {0, 5}, {1, 5}, {1, 6}, {3, 6}, {3, 7}, {2, 7}, {4, 6}, {5, 7}});
      break;
  }
  return Gadget{name, g, deficient_vertices(g)};
}

Gadget named_graph(std::string_view s) {
  for (const Entry& e : kEntries)
    if (e.slug == s) return named_graph(e.name);
  throw std::invalid_argument("unknown gadget '" + std::string(s) + "'");
}

Graph cycle_of_edge_deleted_petersen(int k) {
  if (k < 3) throw std::invalid_argument("cycle of Petersen copies needs k >= 3");
  if (10 * k > kMaxVertices) throw GraphError("cycle of Petersen copies exceeds vertex capacity");
  Gadget p = named_graph(NamedGadget::PetersenMinusEdge);
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) {
    for (const Edge& e : p.graph.edges()) es.emplace_back(10 * i + e.u, 10 * i + e.v);
    es.emplace_back(10 * i + p.attach[1], 10 * ((i + 1) % k) + p.attach[0]);
  }
  return Graph::from_edges(10 * k, es);
}

Graph substitute_p_star(const Graph& h, const VertexSet& s) {
  if (!degree_profile(h).is_cubic) throw std::invalid_argument("substitution needs a cubic base graph");
  if (s.empty()) throw std::invalid_argument("substitution set is empty");
  if (!s.subset_of(h.vertices())) throw std::invalid_argument("substitution set out of range");
  Gadget star = named_graph(NamedGadget::PetersenMinusVertex);
  const int n = h.order() - s.size() + 9 * s.size();
  if (n > kMaxVertices) throw GraphError("substitution exceeds vertex capacity");

  std::vector<int> base(h.order(), -1);  // new label, or block start for substituted vertices
  int next = 0;
  for (int v : h.vertices() - s) base[v] = next++;
  for (int v : s) {
    base[v] = next;
    next += 9;
  }
  auto port = [&](int v, int toward) {
    if (!s.contains(v)) return base[v];
    auto nb = h.neighbors(v).to_vector();
    int slot = static_cast<int>(std::find(nb.begin(), nb.end(), toward) - nb.begin());
    return base[v] + star.attach[slot];
  };
  std::vector<Edge> es;
  for (int v : s)
    for (const Edge& e : star.graph.edges()) es.emplace_back(base[v] + e.u, base[v] + e.v);
  for (const Edge& e : h.edges()) es.emplace_back(port(e.u, e.v), port(e.v, e.u));
  return Graph::from_edges(n, es);
}

Graph jcell_ring(int m) {
  if (m < 2) throw std::invalid_argument("J-cell ring needs m >= 2");
  if (8 * m > kMaxVertices) throw GraphError("J-cell ring exceeds vertex capacity");
  Gadget cell = named_graph(NamedGadget::SmallestJCell);
  const int a = cell.attach[0], b = cell.attach[1], c = cell.attach[2], d = cell.attach[3];
  std::vector<Edge> es;
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    for (const Edge& e : cell.graph.edges()) es.emplace_back(8 * i + e.u, 8 * i + e.v);
    es.emplace_back(8 * i + b, 8 * j + a);
    es.emplace_back(8 * i + c, 8 * j + d);
  }
  return Graph::from_edges(8 * m, es);
}

Graph edge_expansion(const MultiGraph& h, NamedGadget gadget) {
  Gadget g = named_graph(gadget);
  if (g.attach.size() != 2) throw std::invalid_argument("edge expansion needs a gadget with two attach vertices");
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) != 3) throw std::invalid_argument("edge expansion needs a cubic multigraph");
  const int size = g.graph.order();
  const int n = h.order() + size * static_cast<int>(h.edges().size());
  if (n > kMaxVertices) throw GraphError("edge expansion exceeds vertex capacity");
  std::vector<Edge> es;
  int offset = h.order();
  for (const Edge& e : h.edges()) {
    for (const Edge& x : g.graph.edges()) es.emplace_back(offset + x.u, offset + x.v);
    es.emplace_back(e.u, offset + g.attach[0]);
    es.emplace_back(offset + g.attach[1], e.v);
    offset += size;
  }
  return Graph::from_edges(n, es);
}

}  // namespace mlcubic
