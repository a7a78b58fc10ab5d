#include "mlcubic/hamsearch.hpp"

#include <algorithm>
#include <stdexcept>

#include "mlcubic/properties.hpp"

namespace mlcubic {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

namespace {

struct Counter {
  SearchBudget budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  bool tick() {
    ++nodes;
    if (budget.max_nodes && nodes > *budget.max_nodes) exhausted = true;
    return !exhausted;
  }
};

// Blocks of g[u] for a connected g[u]; a single vertex yields no blocks.
std::vector<VertexSet> blocks_of(const Graph& g, const VertexSet& u) {
  std::vector<VertexSet> blocks;
  std::vector<int> disc(g.order(), -1);
  std::vector<int> low(g.order(), 0);
  std::vector<int> stack;
  int time = 0;
  auto dfs = [&](auto&& self, int v, int parent) -> void {
    disc[v] = low[v] = time++;
    stack.push_back(v);
    for (int w : g.neighbors(v) & u) {
      if (disc[w] == -1) {
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          VertexSet block = VertexSet::single(v);
          while (true) {
            int x = stack.back();
            stack.pop_back();
            block.insert(x);
            if (x == w) break;
          }
          blocks.push_back(block);
        }
      } else if (w != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(dfs, u.first(), -1);
  return blocks;
}

// Can g[u] possibly have a hamiltonian path starting in `starts` and ending in
// `ends`? Necessary conditions only: connectivity and a path-shaped block-cut
// tree whose two leaf blocks host the two ends.
bool block_structure_admits(const Graph& g, const VertexSet& u, const VertexSet& starts, const VertexSet& ends) {
  if (reachable_within(g, u.first(), u) != u) return false;
  if (u.size() <= 2) return true;
  std::vector<VertexSet> blocks = blocks_of(g, u);
  if (blocks.size() <= 1) return true;
  std::vector<int> membership(g.order(), 0);
  for (const VertexSet& b : blocks)
    for (int v : b) ++membership[v];
  VertexSet cut;
  for (int v : u) {
    if (membership[v] > 2) return false;
    if (membership[v] == 2) cut.insert(v);
  }
  std::vector<VertexSet> leaf_interiors;
  for (const VertexSet& b : blocks) {
    int c = (b & cut).size();
    if (c > 2) return false;
    if (c == 1) leaf_interiors.push_back(b - cut);
  }
  if (leaf_interiors.size() != 2) return false;
  const VertexSet& x = leaf_interiors[0];
  const VertexSet& y = leaf_interiors[1];
  return (starts.intersects(x) && ends.intersects(y)) || (starts.intersects(y) && ends.intersects(x));
}

// Hamiltonian path of g[scope] from a fixed start whose last vertex lies in
// `ends`.
class PathSearch {
 public:
  PathSearch(const Graph& g, VertexSet scope, VertexSet ends, Pruning pruning, Counter& counter)
      : g_(g), scope_(scope), ends_(ends), pruning_(pruning), counter_(counter) {}

  Verdict run(int start, std::vector<int>& path) {
    path.assign(1, start);
    VertexSet unvisited = scope_;
    unvisited.erase(start);
    if (unvisited.empty()) return ends_.contains(start) ? Verdict::Yes : Verdict::No;
    return extend(start, unvisited, path);
  }

 private:
  bool feasible(int cur, const VertexSet& u) const {
    VertexSet entry = g_.neighbors(cur) & u;
    if (entry.empty() || !ends_.intersects(u)) return false;
    if (pruning_.degree) {
      int forced_ends = 0;
      for (int v : u) {
        int rd = (g_.neighbors(v) & u).size() + (entry.contains(v) ? 1 : 0);
        if (rd == 0) return false;
        if (rd < 2) {
          if (!ends_.contains(v) || ++forced_ends > 1) return false;
        }
      }
    }
    if (pruning_.articulation && !block_structure_admits(g_, u, entry, ends_ & u)) return false;
    return true;
  }

  Verdict extend(int cur, VertexSet& u, std::vector<int>& path) {
    if (u.empty()) return ends_.contains(cur) ? Verdict::Yes : Verdict::No;
    if (!counter_.tick()) return Verdict::Indeterminate;
    if (!feasible(cur, u)) return Verdict::No;

    VertexSet entry = g_.neighbors(cur) & u;
    std::vector<int> order = entry.to_vector();
    if (pruning_.ordering) {
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return (g_.neighbors(x) & u).size() < (g_.neighbors(y) & u).size();
      });
    }
    bool open = false;
    for (int w : order) {
      u.erase(w);
      path.push_back(w);
      Verdict r = extend(w, u, path);
      if (r == Verdict::Yes) return r;
      path.pop_back();
      u.insert(w);
      if (r == Verdict::Indeterminate) {
        open = true;
        if (counter_.exhausted) break;
      }
    }
    return open ? Verdict::Indeterminate : Verdict::No;
  }

  const Graph& g_;
  VertexSet scope_;
  VertexSet ends_;
  Pruning pruning_;
  Counter& counter_;
};

PathResult finish(Verdict v, std::vector<int> path, const Counter& c) {
  PathResult r;
  r.verdict = v;
  if (v == Verdict::Yes) r.witness = std::move(path);
  r.nodes = c.nodes;
  return r;
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

PathResult has_ham_path_from(const Graph& g, int start, SearchBudget budget, Pruning pruning) {
  check_vertex(g, start);
  Counter counter{budget};
  if (!is_connected(g)) return finish(Verdict::No, {}, counter);
  std::vector<int> path;
  PathSearch search(g, g.vertices(), g.vertices(), pruning, counter);
  Verdict v = search.run(start, path);
  return finish(v, std::move(path), counter);
}

PathResult has_ham_path_between(const Graph& g, int a, int b, SearchBudget budget, Pruning pruning) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw std::invalid_argument("path endpoints must differ");
  Counter counter{budget};
  if (!is_connected(g)) return finish(Verdict::No, {}, counter);
  std::vector<int> path;
  PathSearch search(g, g.vertices(), VertexSet::single(b), pruning, counter);
  Verdict v = search.run(a, path);
  return finish(v, std::move(path), counter);
}

PathResult has_ham_path(const Graph& g, SearchBudget budget, Pruning pruning) {
  Counter counter{budget};
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return finish(Verdict::No, {}, counter);

  std::vector<int> starts(n);
  for (int v = 0; v < n; ++v) starts[v] = v;
  std::stable_sort(starts.begin(), starts.end(), [&](int x, int y) { return g.degree(x) < g.degree(y); });
  int leaves = static_cast<int>(std::count_if(starts.begin(), starts.end(), [&](int v) { return g.degree(v) == 1; }));
  if (leaves > 2) return finish(Verdict::No, {}, counter);
  // Some endpoint is a leaf whenever leaves exist, so one start suffices.
  if (leaves > 0) starts.resize(1);

  // Refuting start s also refutes every path ending at s.
  VertexSet ends = g.vertices();
  bool open = false;
  std::vector<int> path;
  for (int s : starts) {
    PathSearch search(g, g.vertices(), ends, pruning, counter);
    Verdict v = search.run(s, path);
    if (v == Verdict::Yes) return finish(v, std::move(path), counter);
    if (v == Verdict::Indeterminate) {
      open = true;
      if (counter.exhausted) break;
    } else {
      ends.erase(s);
    }
  }
  return finish(open ? Verdict::Indeterminate : Verdict::No, {}, counter);
}

PathResult has_ham_cycle(const Graph& g, SearchBudget budget, Pruning pruning) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("hamiltonian cycle needs at least 3 vertices");
  Counter counter{budget};
  if (!is_connected(g)) return finish(Verdict::No, {}, counter);
  int v = 0;
  for (int x = 1; x < n; ++x)
    if (g.degree(x) < g.degree(v)) v = x;
  if (g.degree(v) < 2) return finish(Verdict::No, {}, counter);
  std::vector<int> path;
  PathSearch search(g, g.vertices(), g.neighbors(v), pruning, counter);
  Verdict r = search.run(v, path);
  return finish(r, std::move(path), counter);
}

namespace {

class TwoPathSearch {
 public:
  TwoPathSearch(const Graph& g, int b, int c, int d, Pruning pruning, Counter& counter)
      : g_(g), b_(b), c_(c), d_(d), pruning_(pruning), counter_(counter) {}

  Verdict extend(int cur, VertexSet& u, std::vector<int>& first, std::vector<int>& second) {
    if (cur == b_) {
      PathSearch rest(g_, u, VertexSet::single(d_), pruning_, counter_);
      return rest.run(c_, second);
    }
    if (!counter_.tick()) return Verdict::Indeterminate;
    if (!feasible(cur, u)) return Verdict::No;
    VertexSet options = g_.neighbors(cur) & u;
    options.erase(c_);
    options.erase(d_);
    bool open = false;
    for (int w : options) {
      u.erase(w);
      first.push_back(w);
      Verdict r = extend(w, u, first, second);
      if (r == Verdict::Yes) return r;
      first.pop_back();
      u.insert(w);
      if (r == Verdict::Indeterminate) {
        open = true;
        if (counter_.exhausted) break;
      }
    }
    return open ? Verdict::Indeterminate : Verdict::No;
  }

 private:
  // u still holds b, c and d. What remains must split into the tail of the
  // first path (cur .. b) and the whole second path (c .. d).
  bool feasible(int cur, const VertexSet& u) const {
    if (pruning_.degree) {
      for (int v : u) {
        if (v == b_ || v == c_ || v == d_) continue;
        int rd = (g_.neighbors(v) & u).size() + (g_.adjacent(v, cur) ? 1 : 0);
        if (rd < 2) return false;
      }
    }
    if (pruning_.articulation) {
      for (const VertexSet& comp : components_within(g_, u)) {
        bool has_b = comp.contains(b_);
        bool has_c = comp.contains(c_);
        if (!has_b && !has_c) return false;
        if (has_c != comp.contains(d_)) return false;
        if (has_b && !g_.neighbors(cur).intersects(comp)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int b_;
  int c_;
  int d_;
  Pruning pruning_;
  Counter& counter_;
};

}  // namespace

TwoPathResult has_spanning_two_paths(const Graph& g, std::pair<int, int> p1, std::pair<int, int> p2,
                                     SearchBudget budget, Pruning pruning) {
  auto [a, b] = p1;
  auto [c, d] = p2;
  for (int v : {a, b, c, d}) check_vertex(g, v);
  VertexSet ends{a, b, c, d};
  if (ends.size() != 4) throw std::invalid_argument("endpoint pairs must use four distinct vertices");

  Counter counter{budget};
  TwoPathResult result;
  std::vector<int> first{a};
  std::vector<int> second;
  VertexSet u = g.vertices();
  u.erase(a);
  TwoPathSearch search(g, b, c, d, pruning, counter);
  result.verdict = search.extend(a, u, first, second);
  if (result.verdict == Verdict::Yes) {
    result.first = std::move(first);
    result.second = std::move(second);
  }
  result.nodes = counter.nodes;
  return result;
}

bool is_path_in(const Graph& g, const std::vector<int>& path) {
  VertexSet seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    int v = path[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  return true;
}

bool is_ham_path_witness(const Graph& g, const std::vector<int>& path) {
  return static_cast<int>(path.size()) == g.order() && is_path_in(g, path);
}

bool is_ham_cycle_witness(const Graph& g, const std::vector<int>& cycle) {
  return g.order() >= 3 && is_ham_path_witness(g, cycle) && g.adjacent(cycle.front(), cycle.back());
}

namespace {

struct PairQuery {
  std::string name;
  int x1, y1;
  int x2 = -1, y2 = -1;  // second pair for pairs of pairs

  [[nodiscard]] bool uses(int v) const { return v == x1 || v == y1 || v == x2 || v == y2; }
};

// Good pair / good pair of pairs in g, where g is h with `removed` deleted
// and `map` sends h's labels into g.
Verdict good_in(const Graph& g, const PairQuery& q, const std::vector<int>& map, SearchBudget budget) {
  if (q.x2 < 0) {
    if (g.order() == 1) return Verdict::No;
    return has_ham_path_between(g, map[q.x1], map[q.y1], budget).verdict;
  }
  return has_spanning_two_paths(g, {map[q.x1], map[q.y1]}, {map[q.x2], map[q.y2]}, budget).verdict;
}

}  // namespace

JCellReport is_jcell(const Graph& h, int a, int b, int c, int d, SearchBudget budget) {
  for (int v : {a, b, c, d}) check_vertex(h, v);
  if (VertexSet{a, b, c, d}.size() != 4) throw std::invalid_argument("J-cell terminals must be distinct");

  JCellReport report;
  std::vector<int> identity(h.order());
  for (int v = 0; v < h.order(); ++v) identity[v] = v;

  auto fail = [&](int condition, std::string detail) {
    report.is_jcell = false;
    report.failed_condition = condition;
    report.detail = std::move(detail);
    return report;
  };

  const PairQuery required[] = {{"(a,d)", a, d}, {"(b,c)", b, c}};
  for (const PairQuery& q : required) {
    Verdict v = good_in(h, q, identity, budget);
    if (v == Verdict::Indeterminate) report.indeterminate = true;
    if (v == Verdict::No) return fail(1, q.name + " is not good");
  }

  const PairQuery listed[] = {{"(a,b)", a, b},
                              {"(c,d)", c, d},
                              {"(a,c)", a, c},
                              {"(b,d)", b, d},
                              {"((a,b),(c,d))", a, b, c, d},
                              {"((a,c),(b,d))", a, c, b, d}};
  for (const PairQuery& q : listed) {
    Verdict v = good_in(h, q, identity, budget);
    if (v == Verdict::Indeterminate) report.indeterminate = true;
    if (v == Verdict::Yes) return fail(2, q.name + " is good");
  }

  for (int removed = 0; removed < h.order(); ++removed) {
    VertexSet keep = h.vertices();
    keep.erase(removed);
    if (keep.empty()) return fail(3, "no vertices remain after deleting " + std::to_string(removed));
    InducedSubgraph sub = induced_subgraph(h, keep);
    std::vector<int> map(h.order(), -1);
    for (int i = 0; i < sub.graph.order(); ++i) map[sub.to_original[i]] = i;
    bool found = false;
    bool open = false;
    for (const PairQuery& q : listed) {
      if (q.uses(removed)) continue;
      Verdict v = good_in(sub.graph, q, map, budget);
      if (v == Verdict::Yes) {
        found = true;
        break;
      }
      if (v == Verdict::Indeterminate) open = true;
    }
    if (open && !found) report.indeterminate = true;
    if (!found && !open) return fail(3, "no listed pair is good after deleting vertex " + std::to_string(removed));
  }

  report.is_jcell = !report.indeterminate;
  if (report.indeterminate) report.detail = "search budget exhausted";
  return report;
}

}  // namespace mlcubic
