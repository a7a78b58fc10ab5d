#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mlcubic/graph.hpp"
#include "mlcubic/hamsearch.hpp"

namespace mlcubic {

using BigInt = boost::multiprecision::cpp_int;

/// Rooted spanning tree stored as a parent array; parent[root] == -1.
struct SpanningTree {
  std::vector<int> parent;
  int root = 0;
  int leaf_count = 0;

  /// Builds from n - 1 edges; throws std::invalid_argument unless they form a
  /// spanning tree of K_n.
  static SpanningTree from_edges(int n, const std::vector<Edge>& edges, int root = 0);
  /// A path visited in order, rooted at its first vertex.
  static SpanningTree from_path(int n, const std::vector<int>& path);

  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::vector<int> degrees() const;
};

/// Parent edges exist in g, the structure is a single tree on V(g) and
/// leaf_count matches.
bool is_spanning_tree_of(const Graph& g, const SpanningTree& t);

/// Number of spanning trees via a fraction-free Laplacian minor determinant.
/// 0 for disconnected graphs and for the empty graph.
BigInt count_spanning_trees_kirchhoff(const Graph& g);

struct EnumerationSummary {
  std::uint64_t count = 0;
  int min_leaves = 0;  ///< over visited trees; 0 when none visited
  bool aborted = false;
};

/// Visits every spanning tree exactly once (edge lists, ascending). Reverse
/// search over single edge exchanges rooted at the BFS tree. The visitor
/// returns false to stop.
EnumerationSummary enumerate_spanning_trees(const Graph& g,
                                            const std::function<bool(const std::vector<Edge>&)>& visitor = {});

struct TreeResult {
  Verdict verdict = Verdict::No;
  std::optional<SpanningTree> tree;
  std::uint64_t nodes = 0;
};

/// Spanning tree with at most k leaves. k == 2 is answered by the hamiltonian
/// path engine; larger k by a tree-growing search bounded by forced leaves.
TreeResult has_tree_le_k_leaves(const Graph& g, int k, SearchBudget budget = {});

struct MlResult {
  Verdict verdict = Verdict::No;  ///< Yes: ml is exact; Indeterminate: ml is an upper bound
  int ml = 0;
  int lower_bound = 0;
  SpanningTree witness;
  std::uint64_t nodes = 0;
};

struct MlOptions {
  SearchBudget budget;
  /// For n <= 14, enumerate all spanning trees and compare when the Kirchhoff
  /// count does not exceed this. 0 disables the cross-check.
  std::uint64_t cross_check_limit = 2'000'000;
};

/// Ascending k from 2. Requires a connected graph with n >= 2
/// (std::invalid_argument otherwise).
MlResult min_leaf_number(const Graph& g, MlOptions options = {});

struct MuResult {
  Verdict verdict = Verdict::No;  ///< Yes: mu exact; Indeterminate: mu is an upper bound
  int mu = 0;
  int lower_bound = 0;
  std::vector<std::vector<int>> cover;
  std::uint64_t nodes = 0;
};

/// Cover by at most k vertex-disjoint paths.
struct CoverSearchResult {
  Verdict verdict = Verdict::No;
  std::vector<std::vector<int>> cover;
  std::uint64_t nodes = 0;
};
CoverSearchResult has_path_cover_le_k(const Graph& g, int k, SearchBudget budget = {});

/// Smallest number of vertex-disjoint paths covering V(g), ascending from 1.
/// Requires n >= 1.
MuResult path_cover_number(const Graph& g, SearchBudget budget = {});

/// max(1, c(g - d) - |d|).
int mu_lower_bound_deletion(const Graph& g, const VertexSet& d);

/// Paths are vertex-disjoint, each a path of g, together covering V(g).
bool is_path_cover_of(const Graph& g, const std::vector<std::vector<int>>& cover);

}  // namespace mlcubic
