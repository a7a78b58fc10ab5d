#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "mlcubic/hamsearch.hpp"
#include "mlcubic/properties.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mlcubic;

namespace {

// Petersen minus two adjacent vertices; terminals a, b, c, d are 0..3.
Graph smallest_jcell() {
  return Graph::from_edges(8, {{2, 4}, {0, 4}, {0, 5}, {1, 5}, {1, 6}, {3, 6}, {3, 7}, {2, 7}, {4, 6}, {5, 7}});
}

Graph k4_minus_edge() { return complete_graph(4).without_edge(0, 1); }

}  // namespace

TEST_CASE("hamiltonian path: small cases") {
  auto c4 = has_ham_path(cycle_graph(4));
  CHECK(c4.yes());
  CHECK(is_ham_path_witness(cycle_graph(4), c4.witness));

  auto p = has_ham_path(petersen_graph());
  CHECK(p.yes());
  CHECK(is_ham_path_witness(petersen_graph(), p.witness));

  CHECK(has_ham_path(Graph(1)).yes());
  CHECK(has_ham_path(Graph(2)).verdict == Verdict::No);
  CHECK(has_ham_path(star_graph(3)).verdict == Verdict::No);
  CHECK(has_ham_path(path_graph(6)).yes());
}

TEST_CASE("hamiltonian path: order-28 connectivity-3 fixture is not traceable") {
  auto r = has_ham_path(testsupport::load_fixture("nt28_c3"));
  CHECK(r.verdict == Verdict::No);
}

TEST_CASE("hamiltonian path from a start") {
  for (int v = 0; v < 4; ++v) {
    auto r = has_ham_path_from(cycle_graph(4), v);
    REQUIRE(r.yes());
    CHECK(r.witness.front() == v);
    CHECK(is_ham_path_witness(cycle_graph(4), r.witness));
  }
  auto r = has_ham_path_from(k4_minus_edge(), 0);
  REQUIRE(r.yes());
  CHECK(r.witness.front() == 0);
  CHECK(is_ham_path_witness(k4_minus_edge(), r.witness));

  for (const char* name : {"ls18_01", "ls18_02", "ls18_03", "ls18_04"}) {
    Graph g = testsupport::load_fixture(name);
    auto prof = degree_profile(g);
    CHECK(prof.degree2_vertices.size() >= 2);
    for (int v : prof.degree2_vertices) CHECK(has_ham_path_from(g, v).verdict == Verdict::No);
    CHECK(has_ham_path(g).yes());
  }
}

TEST_CASE("hamiltonian path between two vertices") {
  auto r = has_ham_path_between(k4_minus_edge(), 0, 1);
  REQUIRE(r.yes());
  CHECK(is_ham_path_witness(k4_minus_edge(), r.witness));
  CHECK(((r.witness.front() == 0 && r.witness.back() == 1) || (r.witness.front() == 1 && r.witness.back() == 0)));

  Graph p = petersen_graph();
  Edge e = p.edges().front();
  CHECK(has_ham_path_between(p.without_edge(e.u, e.v), e.u, e.v).verdict == Verdict::No);

  auto j = has_ham_path_between(smallest_jcell(), 0, 3);
  CHECK(j.yes());
  CHECK(is_ham_path_witness(smallest_jcell(), j.witness));
  CHECK_THROWS_AS((void)has_ham_path_between(p, 2, 2), std::invalid_argument);
}

TEST_CASE("hamiltonian cycle") {
  auto k4 = has_ham_cycle(complete_graph(4));
  CHECK(k4.yes());
  CHECK(is_ham_cycle_witness(complete_graph(4), k4.witness));
  CHECK(has_ham_cycle(petersen_graph()).verdict == Verdict::No);
  auto c6 = has_ham_cycle(cycle_graph(6));
  CHECK(c6.yes());
  CHECK(is_ham_cycle_witness(cycle_graph(6), c6.witness));
  CHECK(has_ham_cycle(path_graph(5)).verdict == Verdict::No);
  CHECK_THROWS_AS((void)has_ham_cycle(path_graph(2)), std::invalid_argument);
}

TEST_CASE("spanning pairs of paths") {
  auto c4 = has_spanning_two_paths(cycle_graph(4), {0, 1}, {2, 3});
  CHECK(c4.verdict == Verdict::Yes);
  CHECK(c4.first.size() + c4.second.size() == 4);
  CHECK(has_spanning_two_paths(complete_graph(4), {0, 1}, {2, 3}).verdict == Verdict::Yes);
  CHECK(has_spanning_two_paths(smallest_jcell(), {0, 1}, {2, 3}).verdict == Verdict::No);
  CHECK(has_spanning_two_paths(cycle_graph(4), {0, 2}, {1, 3}).verdict == Verdict::No);
  CHECK_THROWS_AS((void)has_spanning_two_paths(complete_graph(4), {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("J-cell recognition") {
  auto r = is_jcell(smallest_jcell(), 0, 1, 2, 3);
  CHECK(r.is_jcell);
  CHECK(r.failed_condition == 0);

  oracle::JCellOracle k4(complete_graph(4));
  auto k = is_jcell(complete_graph(4), 0, 1, 2, 3);
  CHECK_FALSE(k.is_jcell);
  CHECK(k.failed_condition == 2);
  CHECK_FALSE(k4.is_jcell(0, 1, 2, 3));

  oracle::JCellOracle c8(cycle_graph(8));
  CHECK_FALSE(c8.is_jcell(0, 2, 4, 6));
  auto c = is_jcell(cycle_graph(8), 0, 2, 4, 6);
  CHECK_FALSE(c.is_jcell);
  CHECK(c.failed_condition == 1);
  CHECK_THROWS_AS((void)is_jcell(cycle_graph(8), 0, 0, 4, 6), std::invalid_argument);
}

TEST_CASE("J-cell recognition agrees with the brute-force oracle on small graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);
    Graph g = testgen::random_connected_graph(n, 3 + static_cast<int>(rng() % 5), rng);
    oracle::JCellOracle o(g);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            if (VertexSet{a, b, c, d}.size() != 4) continue;
            CHECK(is_jcell(g, a, b, c, d).is_jcell == o.is_jcell(a, b, c, d));
          }
  }
}

TEST_CASE("witnesses and the naive oracle agree on random graphs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = testgen::random_graph(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    auto facts = oracle::path_facts(g, true);
    bool connected = is_connected(g);

    auto any = has_ham_path(g);
    CHECK(any.yes() == (facts.traceable && connected));
    if (any.yes()) CHECK(is_ham_path_witness(g, any.witness));
    if (n >= 3) {
      auto cyc = has_ham_cycle(g);
      CHECK(cyc.yes() == facts.hamiltonian);
      if (cyc.yes()) CHECK(is_ham_cycle_witness(g, cyc.witness));
    }

    bool some_start = false;
    bool some_pair = false;
    for (int v = 0; v < n; ++v) {
      auto r = has_ham_path_from(g, v);
      CHECK(r.yes() == facts.starts.contains(v));
      if (r.yes()) CHECK((is_ham_path_witness(g, r.witness) && r.witness.front() == v));
      some_start = some_start || r.yes();
      for (int u = v + 1; u < n; ++u) {
        auto b = has_ham_path_between(g, v, u);
        CHECK(b.yes() == oracle::good(facts, v, u));
        if (b.yes()) CHECK(is_ham_path_witness(g, b.witness));
        some_pair = some_pair || b.yes();
      }
    }
    CHECK(some_start == any.yes());
    if (n >= 2) CHECK(some_pair == any.yes());

    if (n >= 4) {
      for (int rep = 0; rep < 4; ++rep) {
        auto perm = testgen::random_permutation(n, rng);
        auto r = has_spanning_two_paths(g, {perm[0], perm[1]}, {perm[2], perm[3]});
        CHECK((r.verdict == Verdict::Yes) == oracle::good2(facts, perm[0], perm[1], perm[2], perm[3]));
        if (r.verdict == Verdict::Yes) {
          CHECK(is_path_in(g, r.first));
          CHECK(is_path_in(g, r.second));
          CHECK(static_cast<int>(r.first.size() + r.second.size()) == n);
        }
      }
    }
  }
}

TEST_CASE("pruning rules never change verdicts") {
  std::mt19937_64 rng(47);
  const Pruning variants[] = {{false, false, false}, {true, false, false}, {false, true, false},
                              {false, false, true},  {true, true, false},  {true, true, true}};
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 4 + static_cast<int>(rng() % 11);
    Graph g = trial % 2 == 0 ? testgen::random_connected_graph(n, static_cast<int>(rng() % (n + 1)), rng)
                             : testgen::random_cubic(n + n % 2, rng);
    int a = static_cast<int>(rng() % g.order());
    int b = (a + 1 + static_cast<int>(rng() % (g.order() - 1))) % g.order();
    Verdict path_ref = has_ham_path(g, {}, variants[0]).verdict;
    Verdict from_ref = has_ham_path_from(g, a, {}, variants[0]).verdict;
    Verdict between_ref = has_ham_path_between(g, a, b, {}, variants[0]).verdict;
    Verdict cycle_ref = has_ham_cycle(g, {}, variants[0]).verdict;
    for (const Pruning& p : variants) {
      CHECK(has_ham_path(g, {}, p).verdict == path_ref);
      CHECK(has_ham_path_from(g, a, {}, p).verdict == from_ref);
      CHECK(has_ham_path_between(g, a, b, {}, p).verdict == between_ref);
      CHECK(has_ham_cycle(g, {}, p).verdict == cycle_ref);
    }
  }
}

TEST_CASE("budget exhaustion yields Indeterminate, never a verdict") {
  Graph g = testsupport::load_fixture("nt28_c3");
  auto r = has_ham_path(g, SearchBudget::nodes(10));
  CHECK(r.verdict == Verdict::Indeterminate);
  CHECK(r.witness.empty());
  CHECK(has_ham_cycle(petersen_graph(), SearchBudget::nodes(1)).verdict == Verdict::Indeterminate);
  auto j = is_jcell(smallest_jcell(), 0, 1, 2, 3, SearchBudget::nodes(1));
  CHECK_FALSE(j.is_jcell);
}
