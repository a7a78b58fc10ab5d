#include "mlcubic/cover.hpp"

#include <algorithm>
#include <functional>

#include <boost/pending/disjoint_sets.hpp>

#include "mlcubic/hamsearch.hpp"
#include "mlcubic/properties.hpp"

namespace mlcubic {

VdpCover::VdpCover(std::vector<std::vector<int>> paths, int threshold)
    : paths_(std::move(paths)), threshold_(threshold), initial_size_(static_cast<int>(paths_.size())) {
  if (threshold < 1) throw std::invalid_argument("short threshold must be positive");
}

int VdpCover::short_count() const {
  int s = 0;
  for (int i = 0; i < size(); ++i) s += is_short(i) ? 1 : 0;
  return s;
}

long long VdpCover::sum_squares() const {
  long long total = 0;
  for (const auto& p : paths_) total += static_cast<long long>(p.size()) * static_cast<long long>(p.size());
  return total;
}

bool VdpCover::is_cover_of(const Graph& g) const { return is_path_cover_of(g, paths_); }

VdpCover initial_vdp_cover(const Graph& g, int threshold) {
  std::vector<std::vector<int>> paths;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    std::vector<int> path{left.first()};
    left.erase(path.front());
    for (int pass = 0; pass < 2; ++pass) {
      while (true) {
        VertexSet next = g.neighbors(path.back()) & left;
        if (next.empty()) break;
        path.push_back(next.first());
        left.erase(path.back());
      }
      std::reverse(path.begin(), path.end());
    }
    paths.push_back(std::move(path));
  }
  return VdpCover(std::move(paths), threshold);
}

long long exchange_gain(long long q, long long p, long long k) { return 2 * k * k + 2 * k * (q - p); }

std::optional<Exchange> find_exchange(const Graph& g, const VdpCover& c) {
  const auto& paths = c.paths();
  std::optional<Exchange> best;
  auto consider = [&](Exchange e) {
    if (!best || e.gain > best->gain) best = e;
  };
  for (int qi = 0; qi < c.size(); ++qi) {
    const auto& q = paths[qi];
    const int qn = static_cast<int>(q.size());
    for (bool back : {true, false}) {
      if (!back && qn == 1) continue;
      const int y = back ? q.back() : q.front();
      for (int pi = 0; pi < c.size(); ++pi) {
        const auto& p = paths[pi];
        const int pn = static_cast<int>(p.size());
        if (pi == qi || pn > qn) continue;
        for (int pos = 0; pos < pn; ++pos) {
          if (!g.adjacent(y, p[pos])) continue;
          int k = pn - pos;
          consider({qi, back, pi, pos, true, k, exchange_gain(qn, pn, k)});
          if (pn > 1) {
            k = pos + 1;
            consider({qi, back, pi, pos, false, k, exchange_gain(qn, pn, k)});
          }
        }
      }
    }
  }
  return best;
}

VdpCover apply_exchange(const VdpCover& c, const Exchange& move) {
  VdpCover out = c;
  auto& paths = out.mutable_paths();
  std::vector<int> q = paths[move.target];
  std::vector<int> p = paths[move.donor];
  if (!move.target_back) std::reverse(q.begin(), q.end());
  std::vector<int> rest;
  if (move.toward_back) {
    q.insert(q.end(), p.begin() + move.pos, p.end());
    rest.assign(p.begin(), p.begin() + move.pos);
  } else {
    q.insert(q.end(), p.rend() - move.pos - 1, p.rend());
    rest.assign(p.begin() + move.pos + 1, p.end());
  }
  paths[move.target] = std::move(q);
  if (rest.empty()) {
    paths.erase(paths.begin() + move.donor);
    out.set_minimum(false);
  } else {
    paths[move.donor] = std::move(rest);
  }
  return out;
}

VdpCover optimize_cover(const Graph& g, const VdpCover& c, std::optional<int> exact_mu) {
  VdpCover cover = c;
  if (exact_mu && cover.size() > *exact_mu) {
    CoverSearchResult r = has_path_cover_le_k(g, *exact_mu);
    if (r.verdict != Verdict::Yes) throw std::invalid_argument("no path cover of the supplied size exists");
    cover = VdpCover(std::move(r.cover), c.threshold());
    cover.set_initial_size(c.initial_size());
  }
  const long long n = g.order();
  for (long long steps = 0;; ++steps) {
    std::optional<Exchange> move = find_exchange(g, cover);
    if (!move) break;
    if (steps > n * n) throw std::logic_error("exchange sequence failed to terminate");
    cover = apply_exchange(cover, *move);
  }
  if (exact_mu) {
    if (cover.size() < *exact_mu) throw std::invalid_argument("supplied path cover number is too large");
    cover.set_minimum(cover.size() == *exact_mu);
  }
  return cover;
}

namespace {

using Accept = std::function<bool(int)>;

// Anchor and path for short path i, with the external neighbour limited to
// vertices passing `accept`. Target preference: longest owning path, then
// lowest path index, then lowest vertex.
std::optional<AttachmentPlan> plan_attachment(const Graph& g, const std::vector<std::vector<int>>& paths,
                                              const std::vector<int>& owner, int i, const Accept& accept) {
  const std::vector<int>& path = paths[i];
  VertexSet inside;
  for (int v : path) inside.insert(v);

  auto better = [&](int x, int y) {
    if (y < 0) return true;
    auto lx = paths[owner[x]].size();
    auto ly = paths[owner[y]].size();
    if (lx != ly) return lx > ly;
    if (owner[x] != owner[y]) return owner[x] < owner[y];
    return x < y;
  };
  auto pick_external = [&](int t) {
    int best = -1;
    for (int x : g.neighbors(t) - inside)
      if (accept(x) && better(x, best)) best = x;
    return best;
  };

  AttachmentPlan plan;
  for (int t : {path.front(), path.back()}) {
    int x = pick_external(t);
    if (x >= 0 && better(x, plan.external)) {
      plan.anchor = t;
      plan.external = x;
    }
  }
  if (plan.anchor >= 0) {
    plan.path = path;
    if (plan.anchor != path.front()) std::reverse(plan.path.begin(), plan.path.end());
    return plan;
  }

  InducedSubgraph h = induced_subgraph(g, inside);
  for (int local = 0; local < h.graph.order(); ++local) {
    int t = h.to_original[local];
    int x = pick_external(t);
    if (x < 0) continue;
    PathResult r = has_ham_path_from(h.graph, local);
    if (!r.yes()) continue;
    plan.anchor = t;
    plan.external = x;
    plan.rerouted = true;
    plan.path.clear();
    for (int v : r.witness) plan.path.push_back(h.to_original[v]);
    return plan;
  }
  return std::nullopt;
}

std::vector<int> owners(const Graph& g, const std::vector<std::vector<int>>& paths) {
  std::vector<int> owner(g.order(), -1);
  for (int i = 0; i < static_cast<int>(paths.size()); ++i)
    for (int v : paths[i]) owner[v] = i;
  return owner;
}

}  // namespace

AttachmentPlan reroute_short_path(const Graph& g, const VdpCover& c, int i) {
  if (i < 0 || i >= c.size()) throw std::invalid_argument("path index out of range");
  if (!c.is_short(i)) {
    throw LongPathError("path " + std::to_string(i) + " has " + std::to_string(c.paths()[i].size()) +
                        " vertices, not short");
  }
  std::vector<int> owner = owners(g, c.paths());
  std::optional<AttachmentPlan> plan = plan_attachment(g, c.paths(), owner, i, [](int) { return true; });
  if (!plan) throw NoAttachmentError("short path " + std::to_string(i) + " has no attachable endvertex");
  return *plan;
}

CoverReport cover_to_tree(const Graph& g, const VdpCover& c) {
  const int n = g.order();
  if (!c.is_cover_of(g)) throw std::invalid_argument("cover does not partition the vertex set");
  if (!is_connected(g)) throw std::invalid_argument("cover_to_tree needs a connected graph");

  CoverReport report;
  report.n = n;
  report.initial_size = c.initial_size();
  report.final_size = c.size();
  report.final_sum_squares = c.sum_squares();
  report.short_count = c.short_count();
  report.long_count = c.long_count();
  report.minimum_cover = c.minimum();

  std::vector<std::vector<int>> paths = c.paths();
  std::vector<int> owner = owners(g, paths);
  std::vector<int> rank(n, 0);
  std::vector<int> parent(n, 0);
  boost::disjoint_sets<int*, int*> sets(rank.data(), parent.data());
  for (int v = 0; v < n; ++v) sets.make_set(v);
  for (const auto& p : paths)
    for (std::size_t j = 1; j < p.size(); ++j) sets.union_set(p[j - 1], p[j]);

  std::vector<int> order;
  for (int i = 0; i < c.size(); ++i)
    if (c.is_short(i)) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return paths[a].size() < paths[b].size(); });

  std::vector<Edge> joins;
  report.all_short_attached = true;
  for (int i : order) {
    const int root = sets.find_set(paths[i].front());
    auto plan = plan_attachment(g, paths, owner, i, [&](int x) { return sets.find_set(x) != root; });
    if (!plan) {
      report.all_short_attached = false;
      report.notes.push_back("short path " + std::to_string(i) + " could not be attached");
      continue;
    }
    paths[i] = plan->path;
    joins.emplace_back(plan->anchor, plan->external);
    sets.union_set(plan->anchor, plan->external);
  }

  std::vector<Edge> tree_edges = joins;
  for (const auto& p : paths)
    for (std::size_t j = 1; j < p.size(); ++j) tree_edges.emplace_back(p[j - 1], p[j]);
  for (const Edge& e : g.edges()) {
    if (sets.find_set(e.u) == sets.find_set(e.v)) continue;
    sets.union_set(e.u, e.v);
    tree_edges.push_back(e);
  }
  report.tree = SpanningTree::from_edges(n, tree_edges);
  report.leaf_count = report.tree.leaf_count;

  const int s = report.short_count;
  const int l = report.long_count;
  report.bound_s_plus_2l = l > 0 ? s + 2 * l : s + 1;
  report.bound_13_85 = boost::rational<long long>(13LL * n, 85);

  auto require = [&](bool ok, const std::string& why) {
    if (!ok) report.notes.push_back(why);
    return ok;
  };
  bool ok = true;
  ok &= require(degree_profile(g).is_cubic && vertex_connectivity_capped(g, 2) == 2,
                "graph is not 2-connected cubic");
  ok &= require(report.minimum_cover, "cover is not certified minimum");
  ok &= report.all_short_attached;
  ok &= require(report.leaf_count <= report.bound_s_plus_2l, "leaf count exceeds the s + 2l bound");
  ok &= require(10LL * (s + l) <= n, "10(s + l) > n");
  ok &= require(static_cast<long long>(s) + static_cast<long long>(c.threshold()) * l <= n,
                "short and long path sizes exceed n");
  ok &= require(boost::rational<long long>(report.bound_s_plus_2l) <= report.bound_13_85, "bound exceeds 13n/85");
  report.certified = ok;
  return report;
}

CoverReport run_cover_procedure(const Graph& g, std::optional<int> exact_mu, int threshold) {
  VdpCover initial = initial_vdp_cover(g, threshold);
  VdpCover optimized = optimize_cover(g, initial, exact_mu);
  return cover_to_tree(g, optimized);
}

}  // namespace mlcubic
