#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "mlcubic/exact.hpp"
#include "mlcubic/properties.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mlcubic;

namespace {

// Hamiltonian cycle in g joined with k independent universal vertices.
bool aux_reduction_hamiltonian(const Graph& g, int k) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < k; ++i)
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + i);
  Graph aux = Graph::from_edges(n + k, edges);
  if (aux.order() < 3) return false;
  return has_ham_cycle(aux).yes();
}

int mu_by_reduction(const Graph& g) {
  for (int k = 1;; ++k)
    if (aux_reduction_hamiltonian(g, k)) return k;
}

}  // namespace

TEST_CASE("Kirchhoff counts") {
  CHECK(count_spanning_trees_kirchhoff(complete_graph(4)) == 16);
  CHECK(count_spanning_trees_kirchhoff(cycle_graph(5)) == 5);
  CHECK(count_spanning_trees_kirchhoff(path_graph(7)) == 1);
  CHECK(count_spanning_trees_kirchhoff(star_graph(5)) == 1);
  CHECK(count_spanning_trees_kirchhoff(petersen_graph()) == 2000);
  CHECK(count_spanning_trees_kirchhoff(Graph(1)) == 1);
  CHECK(count_spanning_trees_kirchhoff(Graph(3)) == 0);
  CHECK(count_spanning_trees_kirchhoff(cycle_graph(3).disjoint_union(cycle_graph(3))) == 0);
  // Cayley: n^(n-2) exceeds 64 bits at n = 20.
  BigInt expected = 1;
  for (int i = 0; i < 18; ++i) expected *= 20;
  CHECK(count_spanning_trees_kirchhoff(complete_graph(20)) == expected);
}

TEST_CASE("spanning tree enumeration small cases") {
  auto k4 = enumerate_spanning_trees(complete_graph(4));
  CHECK(k4.count == 16);
  CHECK(k4.min_leaves == 2);
  int paths = 0;
  auto c5 = enumerate_spanning_trees(cycle_graph(5), [&](const std::vector<Edge>& t) {
    auto tree = SpanningTree::from_edges(5, t);
    paths += tree.leaf_count == 2 ? 1 : 0;
    return true;
  });
  CHECK(c5.count == 5);
  CHECK(paths == 5);
  auto p = enumerate_spanning_trees(petersen_graph());
  CHECK(BigInt(p.count) == count_spanning_trees_kirchhoff(petersen_graph()));
  CHECK(p.min_leaves == 2);

  int seen = 0;
  auto stopped = enumerate_spanning_trees(petersen_graph(), [&](const std::vector<Edge>&) { return ++seen < 7; });
  CHECK(stopped.aborted);
  CHECK(stopped.count == 7);
}

TEST_CASE("enumeration visits distinct valid trees") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testgen::random_connected_graph(2 + static_cast<int>(rng() % 7), 4, rng);
    std::set<std::vector<Edge>> seen;
    auto s = enumerate_spanning_trees(g, [&](const std::vector<Edge>& t) {
      CHECK(is_spanning_tree_of(g, SpanningTree::from_edges(g.order(), t)));
      CHECK(seen.insert(t).second);
      return true;
    });
    auto o = oracle::trees_by_subsets(g);
    CHECK(static_cast<long long>(s.count) == o.count);
    CHECK(s.min_leaves == o.min_leaves);
  }
}

TEST_CASE("enumeration count matches Kirchhoff on random graphs") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = testgen::random_connected_graph(n, static_cast<int>(rng() % (n + 2)), rng);
    CHECK(BigInt(enumerate_spanning_trees(g).count) == count_spanning_trees_kirchhoff(g));
  }
}

TEST_CASE("spanning tree validation") {
  Graph c4 = cycle_graph(4);
  SpanningTree t = SpanningTree::from_path(4, {0, 1, 2, 3});
  CHECK(t.leaf_count == 2);
  CHECK(is_spanning_tree_of(c4, t));
  CHECK_FALSE(is_spanning_tree_of(path_graph(4).without_edge(1, 2).with_edge(0, 2), t));
  SpanningTree bad = t;
  bad.leaf_count = 3;
  CHECK_FALSE(is_spanning_tree_of(c4, bad));
  bad = t;
  bad.parent[1] = 3;  // 1 -> 3 is not an edge and creates no path to the root
  CHECK_FALSE(is_spanning_tree_of(c4, bad));
  CHECK_THROWS_AS((void)SpanningTree::from_edges(4, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("few-leaf trees") {
  auto p = has_tree_le_k_leaves(petersen_graph(), 2);
  REQUIRE(p.verdict == Verdict::Yes);
  CHECK(is_spanning_tree_of(petersen_graph(), *p.tree));
  CHECK(p.tree->leaf_count <= 2);

  Graph f8 = testsupport::load_fixture("nt28_c3");
  CHECK(has_tree_le_k_leaves(f8, 2).verdict == Verdict::No);
  auto three = has_tree_le_k_leaves(f8, 3);
  REQUIRE(three.verdict == Verdict::Yes);
  CHECK(is_spanning_tree_of(f8, *three.tree));
  CHECK(three.tree->leaf_count <= 3);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testgen::random_connected_graph(3 + static_cast<int>(rng() % 10), 3, rng);
    auto r = has_tree_le_k_leaves(g, g.order() - 1);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(is_spanning_tree_of(g, *r.tree));
  }
  CHECK(has_tree_le_k_leaves(star_graph(3), 1).verdict == Verdict::No);
}

TEST_CASE("minimum leaf number examples") {
  for (int n = 3; n <= 12; ++n) {
    auto r = min_leaf_number(cycle_graph(n));
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.ml == 2);
  }
  auto star = min_leaf_number(star_graph(3));
  CHECK(star.ml == 3);
  CHECK(is_spanning_tree_of(star_graph(3), star.witness));
  CHECK(min_leaf_number(path_graph(2)).ml == 2);
  CHECK(min_leaf_number(star_graph(6)).ml == 6);
  auto f = min_leaf_number(testsupport::load_fixture("nt28_c2_01"));
  CHECK(f.verdict == Verdict::Yes);
  CHECK(f.ml == 3);
  CHECK_THROWS_AS((void)min_leaf_number(Graph(3)), std::invalid_argument);
  CHECK_THROWS_AS((void)min_leaf_number(Graph(1)), std::invalid_argument);
}

TEST_CASE("minimum leaf number against subset enumeration") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = testgen::random_connected_graph(n, static_cast<int>(rng() % (n + 1)), rng);
    MlOptions opts;
    opts.cross_check_limit = 0;
    auto r = min_leaf_number(g, opts);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.ml == oracle::trees_by_subsets(g).min_leaves);
    CHECK(is_spanning_tree_of(g, r.witness));
    CHECK(r.witness.leaf_count == r.ml);
    for (int k = 2; k < n; ++k) CHECK((has_tree_le_k_leaves(g, k).verdict == Verdict::Yes) == (k >= r.ml));
  }
}

TEST_CASE("budget exhaustion reports an upper bound") {
  Graph f8 = testsupport::load_fixture("nt28_c3");
  MlOptions opts;
  opts.budget = SearchBudget::nodes(5);
  auto r = min_leaf_number(f8, opts);
  CHECK(r.verdict == Verdict::Indeterminate);
  CHECK(r.ml >= 3);
  CHECK(r.lower_bound <= 3);
  CHECK(is_spanning_tree_of(f8, r.witness));
  auto m = path_cover_number(f8, SearchBudget::nodes(5));
  CHECK(m.verdict == Verdict::Indeterminate);
  CHECK(is_path_cover_of(f8, m.cover));
}

TEST_CASE("path cover number") {
  auto p = path_cover_number(petersen_graph());
  CHECK(p.mu == 1);
  CHECK(is_path_cover_of(petersen_graph(), p.cover));
  CHECK(path_cover_number(star_graph(3)).mu == 2);
  CHECK(path_cover_number(star_graph(5)).mu == 4);
  CHECK(path_cover_number(Graph(3)).mu == 3);
  CHECK(path_cover_number(Graph(1)).mu == 1);

  Graph f8 = testsupport::load_fixture("nt28_c3");
  auto m = path_cover_number(f8);
  CHECK(m.verdict == Verdict::Yes);
  CHECK(m.mu == 2);
  CHECK(is_path_cover_of(f8, m.cover));
  CHECK(aux_reduction_hamiltonian(f8, 2));
  CHECK_FALSE(aux_reduction_hamiltonian(f8, 1));
}

TEST_CASE("path cover number against two independent oracles") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = trial % 4 == 0 ? testgen::random_graph(n, 0.3, rng)
                             : testgen::random_connected_graph(n, static_cast<int>(rng() % 4), rng);
    auto r = path_cover_number(g);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(is_path_cover_of(g, r.cover));
    CHECK(r.mu == oracle::path_cover_by_permutations(g));
    if (n >= 2) CHECK(r.mu == mu_by_reduction(g));
  }
}

TEST_CASE("deletion lower bound") {
  Graph c5 = cycle_graph(5);
  CHECK(mu_lower_bound_deletion(c5, VertexSet{}) == 1);
  CHECK(mu_lower_bound_deletion(star_graph(4), VertexSet{0}) == 3);
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = testgen::random_connected_graph(n, static_cast<int>(rng() % 4), rng);
    VertexSet d;
    for (int v = 0; v < n; ++v)
      if (rng() % 4 == 0) d.insert(v);
    CHECK(mu_lower_bound_deletion(g, d) <= path_cover_number(g).mu);
  }
}

TEST_CASE("sandwich between path cover and leaf numbers") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = testgen::random_connected_graph(n, static_cast<int>(rng() % (n + 1)), rng);
    int ml = min_leaf_number(g).ml;
    int mu = path_cover_number(g).mu;
    CHECK(mu + 1 <= ml);
    CHECK(ml <= 2 * mu);
  }
}
