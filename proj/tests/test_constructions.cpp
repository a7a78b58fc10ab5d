#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mlcubic/constructions.hpp"
#include "mlcubic/exact.hpp"
#include "mlcubic/graph6.hpp"
#include "mlcubic/hamsearch.hpp"
#include "mlcubic/isomorphism.hpp"
#include "mlcubic/properties.hpp"
#include "test_support.hpp"

using namespace mlcubic;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Colour classes by BFS, checked edge by edge.
bool two_colourable(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int w : g.neighbors(queue[i]))
        if (colour[w] < 0) {
          colour[w] = 1 - colour[queue[i]];
          queue.push_back(w);
        }
  }
  for (const Edge& e : g.edges())
    if (colour[e.u] == colour[e.v]) return false;
  return true;
}

void check_cubic_connected(const Graph& g) {
  CHECK(degree_profile(g).is_cubic);
  CHECK(is_connected(g));
}

Graph prism() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

Graph cube() {
  std::vector<Edge> es;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) es.emplace_back(v, v ^ bit);
  return Graph::from_edges(8, es);
}

}  // namespace

TEST_CASE("named gadgets") {
  auto pe = named_graph(NamedGadget::PetersenMinusEdge);
  CHECK(pe.graph.order() == 10);
  CHECK(pe.graph.size() == 14);
  CHECK(pe.attach == std::vector<int>{0, 1});
  CHECK(degree_profile(pe.graph).degree2_vertices.size() == 2);

  auto j = named_graph(NamedGadget::SmallestJCell);
  CHECK(j.graph.order() == 8);
  CHECK(j.attach == std::vector<int>{0, 1, 2, 3});
  CHECK(is_jcell(j.graph, 0, 1, 2, 3).is_jcell);
  Graph p = petersen_graph();
  CHECK(are_isomorphic(j.graph, induced_subgraph(p, p.vertices() - VertexSet{0, 1}).graph));

  auto pv = named_graph(NamedGadget::PetersenMinusVertex);
  CHECK(pv.graph.order() == 9);
  CHECK(pv.attach.size() == 3);
  CHECK(degree_profile(pv.graph).degree2_vertices.size() == 3);

  CHECK(named_graph(NamedGadget::K4MinusEdge).attach == std::vector<int>{0, 1});
  CHECK(named_graph(NamedGadget::K33MinusEdge).attach == std::vector<int>{0, 3});
  CHECK(named_graph(NamedGadget::CubeMinusEdge).attach == std::vector<int>{0, 1});
  CHECK(named_graph("k4-minus-edge").graph == named_graph(NamedGadget::K4MinusEdge).graph);
  CHECK_THROWS_AS((void)named_graph("dodecahedron"), std::invalid_argument);
}

TEST_CASE("gadget labelings match the shipped data files byte for byte") {
  for (NamedGadget name : all_gadgets()) {
    std::string file = testsupport::data_path("gadgets/" + std::string(slug(name)) + ".txt");
    Gadget g = named_graph(name);
    CHECK_MESSAGE(to_edge_list_text(g.graph) == read_text(file), slug(name));
    // attach vertices are exactly the degree-deficient ones
    int top = 0;
    for (int v = 0; v < g.graph.order(); ++v) top = std::max(top, g.graph.degree(v));
    for (int v = 0; v < g.graph.order(); ++v)
      CHECK((g.graph.degree(v) < top) == (std::find(g.attach.begin(), g.attach.end(), v) != g.attach.end()));
  }
}

TEST_CASE("cycle of edge-deleted Petersen graphs") {
  Graph g3 = cycle_of_edge_deleted_petersen(3);
  CHECK(g3.order() == 30);
  check_cubic_connected(g3);
  CHECK(vertex_connectivity_capped(g3, 3) == 2);
  auto copy = induced_subgraph(g3, VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(copy.graph == named_graph(NamedGadget::PetersenMinusEdge).graph);
  CHECK(are_isomorphic(copy.graph, petersen_graph().without_edge(3, 8)));
  CHECK_THROWS_AS((void)cycle_of_edge_deleted_petersen(2), std::invalid_argument);
  for (int k = 3; k <= 6; ++k) {
    Graph g = cycle_of_edge_deleted_petersen(k);
    CHECK(g.order() == 10 * k);
    check_cubic_connected(g);
    CHECK(vertex_connectivity_capped(g, 3) == 2);
  }
}

TEST_CASE("cycle of Petersen graphs, k = 4: ml at least n/10, mu = n/20" * doctest::timeout(120)) {
  Graph g = cycle_of_edge_deleted_petersen(4);
  CHECK(g.order() == 40);
  auto ml = min_leaf_number(g);
  CHECK(ml.verdict == Verdict::Yes);
  CHECK(ml.ml >= 4);
  auto mu = path_cover_number(g);
  CHECK(mu.verdict == Verdict::Yes);
  CHECK(mu.mu == 2);
}

TEST_CASE("P* substitution") {
  Graph k4 = complete_graph(4);
  Graph g = substitute_p_star(k4, VertexSet{0, 1, 2});
  CHECK(g.order() == 28);
  check_cubic_connected(g);
  CHECK(vertex_connectivity_capped(g, 3) == 3);
  CHECK(has_ham_path(g).verdict == Verdict::No);
  CHECK(are_isomorphic(g, testsupport::load_fixture("nt28_c3")));

  Graph one = substitute_p_star(k4, VertexSet{2});
  CHECK(one.order() == 12);
  CHECK(degree_profile(one).is_cubic);

  // |V(h)| = 2k + 2 with 2k + 1 substituted vertices gives 18k + 10.
  CHECK(substitute_p_star(prism(), VertexSet{0, 1, 2, 3, 4}).order() == 18 * 2 + 10);
  CHECK(substitute_p_star(cube(), VertexSet{0, 1, 2, 3, 4, 5, 6}).order() == 18 * 3 + 10);
  for (const Graph& h : {k4, prism(), cube(), petersen_graph()}) {
    for (int size = 1; size <= std::min(h.order(), 6); ++size) {
      VertexSet s;
      for (int v = 0; v < size; ++v) s.insert(v);
      Graph out = substitute_p_star(h, s);
      CHECK(out.order() == h.order() + 8 * size);
      check_cubic_connected(out);
      CHECK(vertex_connectivity_capped(out, 3) == 3);
    }
  }
  CHECK_THROWS_AS((void)substitute_p_star(cycle_graph(5), VertexSet{0}), std::invalid_argument);
  CHECK_THROWS_AS((void)substitute_p_star(k4, VertexSet{}), std::invalid_argument);
}

TEST_CASE("J-cell rings") {
  Graph g3 = jcell_ring(3);
  CHECK(g3.order() == 24);
  check_cubic_connected(g3);
  CHECK(min_leaf_number(g3).ml == 2);
  for (int m = 2; m <= 7; ++m) {
    Graph g = jcell_ring(m);
    CHECK(g.order() == 8 * m);
    check_cubic_connected(g);
  }
  CHECK_THROWS_AS((void)jcell_ring(1), std::invalid_argument);
}

TEST_CASE("J-cell ring with five cells has ml = 3" * doctest::timeout(300)) {
  Graph g = jcell_ring(5);
  CHECK(g.order() == 40);
  auto r = min_leaf_number(g);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(r.ml == 3);
}

TEST_CASE("edge expansions") {
  MultiGraph k4 = MultiGraph::from_graph(complete_graph(4));
  Graph g = edge_expansion(k4, NamedGadget::K4MinusEdge);
  CHECK(g.order() == 28);
  check_cubic_connected(g);
  CHECK(vertex_connectivity_capped(g, 3) == 2);
  CHECK(components_after_deletion(g, VertexSet{0, 1, 2, 3}) == 6);
  CHECK(mu_lower_bound_deletion(g, VertexSet{0, 1, 2, 3}) == 2);
  CHECK(min_leaf_number(g).ml == 28 / 14 + 1);

  Graph t = edge_expansion(theta_multigraph(), NamedGadget::K4MinusEdge);
  CHECK(t.order() == 14);
  check_cubic_connected(t);
  CHECK(min_leaf_number(t).ml == 14 / 14 + 1);

  Graph c = edge_expansion(theta_multigraph(), NamedGadget::CubeMinusEdge);
  CHECK(c.order() == 26);
  check_cubic_connected(c);
  CHECK(is_bipartite(c));
  CHECK(two_colourable(c));
  CHECK(has_ham_path(c).yes());
  CHECK(min_leaf_number(c).ml == 2);

  Graph k = edge_expansion(MultiGraph::from_graph(complete_bipartite(3, 3)), NamedGadget::K33MinusEdge);
  CHECK(k.order() == 60);
  check_cubic_connected(k);
  CHECK(is_bipartite(k));
  CHECK(two_colourable(k));
  CHECK(components_after_deletion(k, VertexSet{0, 1, 2, 3, 4, 5}) == 9);
  CHECK(mu_lower_bound_deletion(k, VertexSet{0, 1, 2, 3, 4, 5}) == 3);

  CHECK_THROWS_AS((void)edge_expansion(k4, NamedGadget::PetersenMinusVertex), std::invalid_argument);
  CHECK_THROWS_AS((void)edge_expansion(k4, NamedGadget::SmallestJCell), std::invalid_argument);
  CHECK_THROWS_AS((void)edge_expansion(MultiGraph(2, {{0, 1}}), NamedGadget::K4MinusEdge), std::invalid_argument);
  CHECK_THROWS_AS(MultiGraph(2, {{1, 1}}), GraphError);
}

TEST_CASE("edge expansion order formula, connectivity and bipartiteness") {
  const std::vector<MultiGraph> bases = {theta_multigraph(), MultiGraph::from_graph(complete_graph(4)),
                                         MultiGraph::from_graph(prism()), MultiGraph::from_graph(cube()),
                                         MultiGraph::from_graph(complete_bipartite(3, 3)),
                                         MultiGraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}})};
  for (const MultiGraph& h : bases) {
    bool bipartite_base = h.order() == 2 || is_bipartite(Graph::from_edges(h.order(), [&] {
                            std::vector<Edge> simple;
                            for (const Edge& e : h.edges())
                              if (std::find(simple.begin(), simple.end(), e) == simple.end()) simple.push_back(e);
                            return simple;
                          }()));
    for (NamedGadget gadget : {NamedGadget::PetersenMinusEdge, NamedGadget::K4MinusEdge, NamedGadget::K33MinusEdge,
                               NamedGadget::CubeMinusEdge}) {
      int size = named_graph(gadget).graph.order();
      if (h.order() + size * static_cast<int>(h.edges().size()) > kMaxVertices) continue;
      Graph g = edge_expansion(h, gadget);
      CHECK(g.order() == h.order() + size * static_cast<int>(h.edges().size()));
      check_cubic_connected(g);
      CHECK(vertex_connectivity_capped(g, 3) == 2);
      if (bipartite_base && (gadget == NamedGadget::K33MinusEdge || gadget == NamedGadget::CubeMinusEdge))
        CHECK(is_bipartite(g));
    }
  }
}

TEST_CASE("builders are deterministic") {
  CHECK(write_graph6(cycle_of_edge_deleted_petersen(5)) == write_graph6(cycle_of_edge_deleted_petersen(5)));
  CHECK(write_graph6(jcell_ring(4)) == write_graph6(jcell_ring(4)));
  CHECK(write_graph6(substitute_p_star(cube(), VertexSet{1, 6})) ==
        write_graph6(substitute_p_star(cube(), VertexSet{1, 6})));
  CHECK(write_graph6(edge_expansion(theta_multigraph(), NamedGadget::CubeMinusEdge)) ==
        write_graph6(edge_expansion(theta_multigraph(), NamedGadget::CubeMinusEdge)));
}
