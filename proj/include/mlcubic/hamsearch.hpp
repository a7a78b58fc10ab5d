#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlcubic/graph.hpp"

namespace mlcubic {

/// Cap on search-tree nodes; no cap means exhaustive.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget nodes(std::uint64_t cap) { return {cap}; }
};

enum class Verdict { Yes, No, Indeterminate };

const char* to_string(Verdict v);

/// Switches for the individual cuts; all on by default. Verdicts must not
/// depend on these, only running time.
struct Pruning {
  bool degree = true;        ///< residual degree < 2 forces an endpoint
  bool articulation = true;  ///< unvisited block-cut tree must be a path
  bool ordering = true;      ///< try low residual degree neighbours first
};

struct PathResult {
  Verdict verdict = Verdict::No;
  std::vector<int> witness;  ///< vertex order when Yes; for cycles the closing edge is implicit
  std::uint64_t nodes = 0;

  [[nodiscard]] bool yes() const { return verdict == Verdict::Yes; }
};

struct TwoPathResult {
  Verdict verdict = Verdict::No;
  std::vector<int> first;
  std::vector<int> second;
  std::uint64_t nodes = 0;
};

/// Disconnected graphs answer No without searching.
PathResult has_ham_path(const Graph& g, SearchBudget budget = {}, Pruning pruning = {});

PathResult has_ham_path_from(const Graph& g, int start, SearchBudget budget = {}, Pruning pruning = {});

/// Throws std::invalid_argument when a == b.
PathResult has_ham_path_between(const Graph& g, int a, int b, SearchBudget budget = {}, Pruning pruning = {});

/// Throws std::invalid_argument when n < 3.
PathResult has_ham_cycle(const Graph& g, SearchBudget budget = {}, Pruning pruning = {});

/// Two vertex-disjoint paths p1.first..p1.second and p2.first..p2.second
/// covering V(g). The four endpoints must be distinct (std::invalid_argument).
TwoPathResult has_spanning_two_paths(const Graph& g, std::pair<int, int> p1, std::pair<int, int> p2,
                                     SearchBudget budget = {}, Pruning pruning = {});

/// True iff `path` is a list of distinct, consecutively adjacent vertices of g.
bool is_path_in(const Graph& g, const std::vector<int>& path);

/// is_path_in plus covering every vertex exactly once.
bool is_ham_path_witness(const Graph& g, const std::vector<int>& path);

/// Hamiltonian path witness whose last vertex is adjacent to the first.
bool is_ham_cycle_witness(const Graph& g, const std::vector<int>& cycle);

struct JCellReport {
  bool is_jcell = false;
  int failed_condition = 0;     ///< 1, 2 or 3; 0 when is_jcell
  std::string detail;           ///< which pair or vertex broke the condition
  bool indeterminate = false;   ///< a budgeted sub-search did not finish
};

/// Checks the three J-cell conditions for (h, a, b, c, d). In condition 3 a
/// listed pair with an endpoint equal to the deleted vertex is skipped.
/// Throws std::invalid_argument unless a, b, c, d are distinct.
JCellReport is_jcell(const Graph& h, int a, int b, int c, int d, SearchBudget budget = {});

}  // namespace mlcubic
