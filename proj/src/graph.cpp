#include "mlcubic/graph.hpp"

#include <sstream>

namespace mlcubic {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (g.adj_[e.u].contains(e.v)) {
      throw GraphError("repeated edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    g.adj_[e.u].insert(e.v);
    g.adj_[e.v].insert(e.u);
    ++g.m_;
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  int n = static_cast<int>(rows.size());
  check_order(n);
  Graph g;
  g.n_ = n;
  VertexSet all = VertexSet::range(n);
  int twice_m = 0;
  for (int v = 0; v < n; ++v) {
    if (!rows[v].subset_of(all)) throw GraphError("adjacency row out of range");
    if (rows[v].contains(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    for (int u : rows[v]) {
      if (!rows[u].contains(v)) throw GraphError("asymmetric adjacency");
    }
    twice_m += rows[v].size();
  }
  g.m_ = twice_m / 2;
  g.adj_ = std::move(rows);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("invalid edge");
  if (adjacent(u, v)) throw GraphError("edge already present");
  Graph g = *this;
  g.adj_[u].insert(v);
  g.adj_[v].insert(u);
  ++g.m_;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adjacent(u, v)) throw GraphError("edge not present");
  Graph g = *this;
  g.adj_[u].erase(v);
  g.adj_[v].erase(u);
  --g.m_;
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  std::vector<VertexSet> rows(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) rows[perm[u]].insert(perm[v]);
  }
  return from_adjacency(std::move(rows));
}

Graph Graph::disjoint_union(const Graph& other) const {
  std::vector<Edge> es = edges();
  for (const Edge& e : other.edges()) es.emplace_back(e.u + n_, e.v + n_);
  return from_edges(n_ + other.n_, es);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream is(text);
  int n = 0;
  int m = 0;
  if (!(is >> n >> m)) throw GraphError("edge list: missing 'n m' header");
  std::vector<Edge> es;
  es.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(is >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges");
    es.emplace_back(u, v);
  }
  std::string extra;
  if (is >> extra) throw GraphError("edge list: trailing data");
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph::from_edges(a + b, es);
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, es);
}

}  // namespace mlcubic
