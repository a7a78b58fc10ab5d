#include "mlcubic/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "mlcubic/properties.hpp"

namespace mlcubic {

// ---------------------------------------------------------------- trees

SpanningTree SpanningTree::from_edges(int n, const std::vector<Edge>& edges, int root) {
  if (n < 1 || root < 0 || root >= n) throw std::invalid_argument("spanning tree needs a root in range");
  if (static_cast<int>(edges.size()) != n - 1) throw std::invalid_argument("spanning tree needs n - 1 edges");
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) throw std::invalid_argument("tree edge out of range");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  SpanningTree t;
  t.root = root;
  t.parent.assign(n, -2);
  t.parent[root] = -1;
  std::vector<int> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : adj[v]) {
      if (t.parent[w] != -2) continue;
      t.parent[w] = v;
      queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) != n) throw std::invalid_argument("edges do not connect all vertices");
  auto deg = t.degrees();
  t.leaf_count = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
  return t;
}

SpanningTree SpanningTree::from_path(int n, const std::vector<int>& path) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
  return from_edges(n, edges, path.empty() ? 0 : path.front());
}

std::vector<Edge> SpanningTree::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < static_cast<int>(parent.size()); ++v)
    if (parent[v] >= 0) out.emplace_back(v, parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SpanningTree::degrees() const {
  std::vector<int> deg(parent.size(), 0);
  for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
    if (parent[v] >= 0) {
      ++deg[v];
      ++deg[parent[v]];
    }
  }
  return deg;
}

bool is_spanning_tree_of(const Graph& g, const SpanningTree& t) {
  const int n = g.order();
  if (static_cast<int>(t.parent.size()) != n || n == 0) return false;
  if (t.root < 0 || t.root >= n || t.parent[t.root] != -1) return false;
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    int p = t.parent[v];
    if (p < 0 || p >= n || !g.adjacent(v, p)) return false;
    int x = v;
    int steps = 0;
    while (x != t.root) {
      x = t.parent[x];
      if (x < 0 || ++steps > n) return false;
    }
  }
  auto deg = t.degrees();
  return t.leaf_count == static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

// ---------------------------------------------------------------- Kirchhoff

BigInt count_spanning_trees_kirchhoff(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  if (n == 1) return 1;
  const int m = n - 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (int i = 1; i < n; ++i) {
    a[i - 1][i - 1] = g.degree(i);
    for (int j : g.neighbors(i))
      if (j >= 1) a[i - 1][j - 1] = -1;
  }
  // Bareiss elimination: every division below is exact.
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < m && pivot < 0; ++i)
        if (a[i][k] != 0) pivot = i;
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[m - 1][m - 1];
  return sign < 0 ? BigInt(-det) : det;
}

// ---------------------------------------------------------------- enumeration

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, const std::function<bool(const std::vector<Edge>&)>& visitor)
      : g_(g), visitor_(visitor), edges_(g.edges()), n_(g.order()) {
    const int m = static_cast<int>(edges_.size());
    index_.assign(n_, std::vector<int>(n_, -1));
    for (int i = 0; i < m; ++i) index_[edges_[i].u][edges_[i].v] = index_[edges_[i].v][edges_[i].u] = i;
    in_root_.assign(m, false);
    in_tree_.assign(m, false);
    tree_adj_.assign(n_, VertexSet{});
    deg_.assign(n_, 0);
    // BFS tree from vertex 0 is the root of the reverse search.
    VertexSet seen = VertexSet::single(0);
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int w : g.neighbors(queue[i])) {
        if (seen.contains(w)) continue;
        seen.insert(w);
        queue.push_back(w);
        in_root_[index_[queue[i]][w]] = true;
      }
    }
  }

  EnumerationSummary run() {
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
      if (in_root_[i]) add(i);
    visit();
    return summary_;
  }

 private:
  void add(int e) {
    in_tree_[e] = true;
    tree_adj_[edges_[e].u].insert(edges_[e].v);
    tree_adj_[edges_[e].v].insert(edges_[e].u);
    ++deg_[edges_[e].u];
    ++deg_[edges_[e].v];
  }

  void remove(int e) {
    in_tree_[e] = false;
    tree_adj_[edges_[e].u].erase(edges_[e].v);
    tree_adj_[edges_[e].v].erase(edges_[e].u);
    --deg_[edges_[e].u];
    --deg_[edges_[e].v];
  }

  // Edge indices on the current tree path between x and y.
  std::vector<int> tree_path(int x, int y) const {
    std::vector<int> prev(n_, -1);
    prev[x] = x;
    std::vector<int> queue{x};
    for (std::size_t i = 0; i < queue.size() && prev[y] < 0; ++i) {
      for (int w : tree_adj_[queue[i]]) {
        if (prev[w] >= 0) continue;
        prev[w] = queue[i];
        queue.push_back(w);
      }
    }
    std::vector<int> out;
    for (int v = y; v != x; v = prev[v]) out.push_back(index_[v][prev[v]]);
    return out;
  }

  VertexSet side_of(int x) const {
    VertexSet seen = VertexSet::single(x);
    std::vector<int> stack{x};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : tree_adj_[v]) {
        if (seen.contains(w)) continue;
        seen.insert(w);
        stack.push_back(w);
      }
    }
    return seen;
  }

  void report() {
    ++summary_.count;
    int leaves = static_cast<int>(std::count(deg_.begin(), deg_.end(), 1));
    if (summary_.count == 1 || leaves < summary_.min_leaves) summary_.min_leaves = leaves;
    if (visitor_) {
      std::vector<Edge> tree;
      for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
        if (in_tree_[i]) tree.push_back(edges_[i]);
      if (!visitor_(tree)) summary_.aborted = true;
    }
  }

  // The parent of a tree T is T + f - e, where f is the smallest root-tree
  // edge missing from T and e the smallest non-root edge on the cycle f closes.
  void visit() {
    report();
    if (summary_.aborted) return;
    const int m = static_cast<int>(edges_.size());
    int missing = m;
    for (int i = 0; i < m; ++i) {
      if (in_root_[i] && !in_tree_[i]) {
        missing = i;
        break;
      }
    }
    for (int f = 0; f < missing; ++f) {
      if (!in_root_[f] || !in_tree_[f]) continue;
      remove(f);
      VertexSet side = side_of(edges_[f].u);
      for (int e = 0; e < m; ++e) {
        if (in_tree_[e] || in_root_[e]) continue;
        if (side.contains(edges_[e].u) == side.contains(edges_[e].v)) continue;
        add(e);
        int smallest = m;
        for (int x : tree_path(edges_[f].u, edges_[f].v))
          if (!in_root_[x]) smallest = std::min(smallest, x);
        if (smallest == e) visit();
        remove(e);
        if (summary_.aborted) break;
      }
      add(f);
      if (summary_.aborted) return;
    }
  }

  const Graph& g_;
  const std::function<bool(const std::vector<Edge>&)>& visitor_;
  std::vector<Edge> edges_;
  int n_;
  std::vector<std::vector<int>> index_;
  std::vector<bool> in_root_;
  std::vector<bool> in_tree_;
  std::vector<VertexSet> tree_adj_;
  std::vector<int> deg_;
  EnumerationSummary summary_;
};

}  // namespace

EnumerationSummary enumerate_spanning_trees(const Graph& g,
                                            const std::function<bool(const std::vector<Edge>&)>& visitor) {
  if (g.order() == 0 || !is_connected(g)) return {};
  TreeEnumerator e(g, visitor);
  return e.run();
}

// ---------------------------------------------------------------- few-leaf trees

namespace {

SpanningTree any_dfs_tree(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  VertexSet seen = VertexSet::single(0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    VertexSet next = g.neighbors(v) - seen;
    if (next.empty()) {
      stack.pop_back();
      continue;
    }
    // Prefer the neighbour with fewest unseen neighbours to keep the tree thin.
    int best = -1;
    int best_deg = n + 1;
    for (int w : next) {
      int d = (g.neighbors(w) - seen).size();
      if (d < best_deg) {
        best = w;
        best_deg = d;
      }
    }
    seen.insert(best);
    edges.emplace_back(v, best);
    stack.push_back(best);
  }
  return SpanningTree::from_edges(n, edges, 0);
}

// Grows a rooted tree by repeatedly choosing an unprocessed tree vertex and
// fixing its full child set. Every rooted spanning tree arises exactly once
// for any state-dependent choice of the vertex to process.
class FewLeafSearch {
 public:
  FewLeafSearch(const Graph& g, int k, SearchBudget budget) : g_(g), k_(k), budget_(budget) {
    const int n = g.order();
    parent_.assign(n, -1);
    added_.assign(n, -1);
  }

  Verdict run(int root) {
    root_ = root;
    in_tree_ = VertexSet::single(root);
    added_[root] = clock_++;
    Verdict v = step();
    return v;
  }

  SpanningTree witness() const {
    std::vector<Edge> edges;
    for (int v = 0; v < g_.order(); ++v)
      if (v != root_) edges.emplace_back(v, parent_[v]);
    return SpanningTree::from_edges(g_.order(), edges, root_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool over_budget() {
    ++nodes_;
    return budget_.max_nodes && nodes_ > *budget_.max_nodes;
  }

  // Lower bound on the final number of leaves, or k + 1 when infeasible.
  int lower_bound() const {
    const VertexSet all = g_.vertices();
    const VertexSet outside = all - in_tree_;
    const VertexSet open = in_tree_ - processed_;
    int forced = leaves_;
    for (int y : open)
      if (!g_.neighbors(y).intersects(outside)) ++forced;
    if (!outside.empty()) {
      if (open.empty()) return k_ + 1;
      const VertexSet reach = outside | open;
      for (int x : outside) {
        int avail = (g_.neighbors(x) & reach).size();
        if (avail == 0) return k_ + 1;
        if (avail == 1) ++forced;
      }
      for (const VertexSet& comp : components_within(g_, outside))
        if (!touches(comp, open)) return k_ + 1;
    }
    return std::max(forced, 2 + excess_);
  }

  bool touches(const VertexSet& comp, const VertexSet& open) const {
    for (int x : comp)
      if (g_.neighbors(x).intersects(open)) return true;
    return false;
  }

  Verdict step() {
    const VertexSet open = in_tree_ - processed_;
    if (open.empty()) return in_tree_ == g_.vertices() && leaves_ <= k_ ? Verdict::Yes : Verdict::No;
    if (over_budget()) return Verdict::Indeterminate;
    if (lower_bound() > k_) return Verdict::No;

    const VertexSet outside = g_.vertices() - in_tree_;
    int v = -1;
    int v_avail = 0;
    for (int y : open) {
      int avail = (g_.neighbors(y) & outside).size();
      if (v < 0 || avail < v_avail || (avail == v_avail && added_[y] > added_[v])) {
        v = y;
        v_avail = avail;
      }
    }
    std::vector<int> avail = (g_.neighbors(v) & outside).to_vector();
    std::stable_sort(avail.begin(), avail.end(), [&](int x, int y) {
      return (g_.neighbors(x) & outside).size() < (g_.neighbors(y) & outside).size();
    });
    const int up = v == root_ ? 0 : 1;
    // Tree degree d adds max(0, d - 2) to the leaf count beyond 2.
    const int max_children = std::min<int>(static_cast<int>(avail.size()), k_ - excess_ - up);
    const int min_children = v == root_ ? 1 : 0;

    std::vector<int> sizes;
    if (min_children <= 1 && max_children >= 1) sizes.push_back(1);
    if (min_children == 0) sizes.push_back(0);
    for (int s = 2; s <= max_children; ++s) sizes.push_back(s);

    bool open_branch = false;
    for (int size : sizes) {
      std::vector<int> pick(size);
      for (int i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        Verdict r = apply(v, up, avail, pick);
        if (r == Verdict::Yes) return r;
        if (r == Verdict::Indeterminate) {
          open_branch = true;
          if (budget_.max_nodes && nodes_ > *budget_.max_nodes) return Verdict::Indeterminate;
        }
        if (!next_combination(pick, static_cast<int>(avail.size()))) break;
      }
    }
    return open_branch ? Verdict::Indeterminate : Verdict::No;
  }

  static bool next_combination(std::vector<int>& pick, int n) {
    int k = static_cast<int>(pick.size());
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    return true;
  }

  Verdict apply(int v, int up, const std::vector<int>& avail, const std::vector<int>& pick) {
    const int degree = static_cast<int>(pick.size()) + up;
    const int extra = std::max(0, degree - 2);
    const bool leaf = degree == 1;
    if (2 + excess_ + extra > k_ && g_.order() > 2) return Verdict::No;
    excess_ += extra;
    leaves_ += leaf ? 1 : 0;
    processed_.insert(v);
    for (int i : pick) {
      int w = avail[i];
      in_tree_.insert(w);
      parent_[w] = v;
      added_[w] = clock_++;
    }
    Verdict r = step();
    if (r != Verdict::Yes) {
      for (int i : pick) in_tree_.erase(avail[i]);
      processed_.erase(v);
      leaves_ -= leaf ? 1 : 0;
      excess_ -= extra;
    }
    return r;
  }

  const Graph& g_;
  int k_;
  SearchBudget budget_;
  int root_ = 0;
  VertexSet in_tree_;
  VertexSet processed_;
  std::vector<int> parent_;
  std::vector<int> added_;
  int clock_ = 0;
  int leaves_ = 0;
  int excess_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

TreeResult has_tree_le_k_leaves(const Graph& g, int k, SearchBudget budget) {
  TreeResult result;
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return result;
  if (n == 1) {
    result.verdict = Verdict::Yes;
    result.tree = SpanningTree::from_edges(1, {});
    return result;
  }
  if (k < 2) return result;
  if (n == 2 || k >= n - 1) {
    result.verdict = Verdict::Yes;
    result.tree = any_dfs_tree(g);
    return result;
  }
  if (k == 2) {
    PathResult p = has_ham_path(g, budget);
    result.verdict = p.verdict;
    result.nodes = p.nodes;
    if (p.yes()) result.tree = SpanningTree::from_path(n, p.witness);
    return result;
  }
  int root = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(root)) root = v;
  FewLeafSearch search(g, k, budget);
  result.verdict = search.run(root);
  result.nodes = search.nodes();
  if (result.verdict == Verdict::Yes) result.tree = search.witness();
  return result;
}

MlResult min_leaf_number(const Graph& g, MlOptions options) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("minimum leaf number needs at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("minimum leaf number needs a connected graph");

  MlResult result;
  SpanningTree best = any_dfs_tree(g);
  result.lower_bound = 2;
  bool open = false;
  for (int k = 2; k < best.leaf_count; ++k) {
    TreeResult r = has_tree_le_k_leaves(g, k, options.budget);
    result.nodes += r.nodes;
    if (r.verdict == Verdict::Yes) {
      best = *r.tree;
      break;
    }
    if (r.verdict == Verdict::No && !open) result.lower_bound = k + 1;
    if (r.verdict == Verdict::Indeterminate) open = true;
  }
  result.witness = best;
  result.ml = best.leaf_count;
  result.verdict = open ? Verdict::Indeterminate : Verdict::Yes;
  if (!open) result.lower_bound = result.ml;

  if (!open && options.cross_check_limit > 0 && n <= 14 &&
      count_spanning_trees_kirchhoff(g) <= BigInt(options.cross_check_limit)) {
    EnumerationSummary all = enumerate_spanning_trees(g);
    if (all.min_leaves != result.ml) {
      throw std::logic_error("minimum leaf search disagrees with spanning tree enumeration");
    }
  }
  return result;
}

// ---------------------------------------------------------------- path covers

namespace {

// Lower bound on the number of paths needed to cover g[r]: per component,
// vertices of residual degree <= 1 are path ends.
int cover_lower_bound(const Graph& g, const VertexSet& r) {
  int total = 0;
  for (const VertexSet& comp : components_within(g, r)) {
    int ends = 0;
    for (int v : comp)
      if ((g.neighbors(v) & comp).size() <= 1) ++ends;
    total += std::max(1, (ends + 1) / 2);
  }
  return total;
}

class CoverSearch {
 public:
  CoverSearch(const Graph& g, int k, SearchBudget budget) : g_(g), k_(k), budget_(budget) {}

  Verdict run() {
    remaining_ = g_.vertices();
    return start_path();
  }

  std::vector<std::vector<int>> cover() const { return done_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool over_budget() {
    ++nodes_;
    return budget_.max_nodes && nodes_ > *budget_.max_nodes;
  }

  Verdict start_path() {
    if (remaining_.empty()) return Verdict::Yes;
    if (static_cast<int>(done_.size()) >= k_) return Verdict::No;
    if (over_budget()) return Verdict::Indeterminate;
    if (static_cast<int>(done_.size()) + cover_lower_bound(g_, remaining_) > k_) return Verdict::No;
    int u = -1;
    int u_deg = 0;
    for (int v : remaining_) {
      int d = (g_.neighbors(v) & remaining_).size();
      if (u < 0 || d < u_deg) {
        u = v;
        u_deg = d;
      }
    }
    // A vertex of residual degree <= 1 ends its path, so grow one side only.
    two_sided_ = u_deg >= 2;
    remaining_.erase(u);
    right_.assign(1, u);
    left_.clear();
    Verdict r = extend(u, true);
    if (r != Verdict::Yes) remaining_.insert(u);
    return r;
  }

  Verdict close_path() {
    std::vector<int> path(left_.rbegin(), left_.rend());
    path.insert(path.end(), right_.begin(), right_.end());
    auto saved_left = left_;
    auto saved_right = right_;
    bool saved_two = two_sided_;
    done_.push_back(std::move(path));
    Verdict r = start_path();
    if (r != Verdict::Yes) {
      done_.pop_back();
      left_ = std::move(saved_left);
      right_ = std::move(saved_right);
      two_sided_ = saved_two;
    }
    return r;
  }

  Verdict extend(int end, bool right_side) {
    if (remaining_.empty()) return close_path();
    if (over_budget()) return Verdict::Indeterminate;
    const int open_ends = right_side && two_sided_ ? 2 : 1;
    const int need = std::max(0, cover_lower_bound(g_, remaining_) - open_ends);
    if (static_cast<int>(done_.size()) + 1 + need > k_) return Verdict::No;

    std::vector<int> next = (g_.neighbors(end) & remaining_).to_vector();
    std::stable_sort(next.begin(), next.end(), [&](int x, int y) {
      return (g_.neighbors(x) & remaining_).size() < (g_.neighbors(y) & remaining_).size();
    });
    bool open = false;
    auto& side = right_side ? right_ : left_;
    for (int w : next) {
      remaining_.erase(w);
      side.push_back(w);
      Verdict r = extend(w, right_side);
      if (r == Verdict::Yes) return r;
      side.pop_back();
      remaining_.insert(w);
      if (r == Verdict::Indeterminate) {
        open = true;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes) return r;
      }
    }
    Verdict r = right_side && two_sided_ ? extend(right_.front(), false) : close_path();
    if (r == Verdict::Yes) return r;
    if (r == Verdict::Indeterminate) open = true;
    return open ? Verdict::Indeterminate : Verdict::No;
  }

  const Graph& g_;
  int k_;
  SearchBudget budget_;
  VertexSet remaining_;
  std::vector<int> left_;
  std::vector<int> right_;
  bool two_sided_ = false;
  std::vector<std::vector<int>> done_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::vector<int>> greedy_cover(const Graph& g) {
  std::vector<std::vector<int>> cover;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    int u = left.first();
    for (int v : left)
      if ((g.neighbors(v) & left).size() < (g.neighbors(u) & left).size()) u = v;
    std::vector<int> path{u};
    left.erase(u);
    while (true) {
      VertexSet next = g.neighbors(path.back()) & left;
      if (next.empty()) break;
      int w = next.first();
      for (int x : next)
        if ((g.neighbors(x) & left).size() < (g.neighbors(w) & left).size()) w = x;
      path.push_back(w);
      left.erase(w);
    }
    cover.push_back(std::move(path));
  }
  return cover;
}

}  // namespace

CoverSearchResult has_path_cover_le_k(const Graph& g, int k, SearchBudget budget) {
  CoverSearchResult result;
  if (g.order() == 0) {
    result.verdict = Verdict::Yes;
    return result;
  }
  if (k < 1) return result;
  CoverSearch search(g, k, budget);
  result.verdict = search.run();
  result.nodes = search.nodes();
  if (result.verdict == Verdict::Yes) result.cover = search.cover();
  return result;
}

MuResult path_cover_number(const Graph& g, SearchBudget budget) {
  if (g.order() < 1) throw std::invalid_argument("path cover number needs at least one vertex");
  MuResult result;
  std::vector<std::vector<int>> best = greedy_cover(g);
  result.lower_bound = 1;
  bool open = false;
  for (int k = 1; k < static_cast<int>(best.size()); ++k) {
    Verdict v;
    std::vector<std::vector<int>> cover;
    if (k == 1) {
      PathResult p = has_ham_path(g, budget);
      v = p.verdict;
      result.nodes += p.nodes;
      if (p.yes()) cover.push_back(p.witness);
    } else {
      CoverSearchResult c = has_path_cover_le_k(g, k, budget);
      v = c.verdict;
      result.nodes += c.nodes;
      cover = std::move(c.cover);
    }
    if (v == Verdict::Yes) {
      best = std::move(cover);
      break;
    }
    if (v == Verdict::No && !open) result.lower_bound = k + 1;
    if (v == Verdict::Indeterminate) open = true;
  }
  result.cover = std::move(best);
  result.mu = static_cast<int>(result.cover.size());
  result.verdict = open ? Verdict::Indeterminate : Verdict::Yes;
  if (!open) result.lower_bound = result.mu;
  return result;
}

int mu_lower_bound_deletion(const Graph& g, const VertexSet& d) {
  return std::max(1, components_after_deletion(g, d) - d.size());
}

bool is_path_cover_of(const Graph& g, const std::vector<std::vector<int>>& cover) {
  VertexSet seen;
  int total = 0;
  for (const auto& path : cover) {
    if (path.empty() || !is_path_in(g, path)) return false;
    for (int v : path) {
      if (seen.contains(v)) return false;
      seen.insert(v);
    }
    total += static_cast<int>(path.size());
  }
  return total == g.order() && seen == g.vertices();
}

}  // namespace mlcubic
