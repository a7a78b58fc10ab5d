#include "mlcubic/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace mlcubic {

namespace {

using Coloring = std::vector<int>;

int count_colors(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Refines both colourings with a shared naming of signatures. Returns false as
// soon as the colour-class sizes of the two graphs diverge.
bool refine_jointly(const Graph& a, const Graph& b, Coloring& ca, Coloring& cb) {
  const int n = a.order();
  int colors = count_colors(ca);
  while (true) {
    std::map<std::vector<int>, int> names;
    std::vector<std::vector<int>> sa(n);
    std::vector<std::vector<int>> sb(n);
    auto signature = [](const Graph& g, const Coloring& c, int v) {
      std::vector<int> s;
      s.reserve(g.degree(v) + 1);
      for (int w : g.neighbors(v)) s.push_back(c[w]);
      std::sort(s.begin(), s.end());
      s.push_back(c[v]);
      std::rotate(s.rbegin(), s.rbegin() + 1, s.rend());
      return s;
    };
    for (int v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      names.emplace(sa[v], 0);
      names.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : names) id = next++;
    std::vector<int> hist(next, 0);
    for (int v = 0; v < n; ++v) {
      ca[v] = names[sa[v]];
      cb[v] = names[sb[v]];
      ++hist[ca[v]];
      --hist[cb[v]];
    }
    if (std::any_of(hist.begin(), hist.end(), [](int h) { return h != 0; })) return false;
    if (next == colors) return true;
    colors = next;
  }
}

bool search(const Graph& a, const Graph& b, Coloring ca, Coloring cb, std::vector<int>& mapping) {
  if (!refine_jointly(a, b, ca, cb)) return false;
  const int n = a.order();
  const int colors = count_colors(ca);
  if (colors == n) {
    std::vector<int> by_color(n);
    for (int w = 0; w < n; ++w) by_color[cb[w]] = w;
    for (int v = 0; v < n; ++v) mapping[v] = by_color[ca[v]];
    for (int u = 0; u < n; ++u) {
      for (int v : a.neighbors(u)) {
        if (!b.adjacent(mapping[u], mapping[v])) return false;
      }
    }
    return true;
  }
  std::vector<int> cell_size(colors, 0);
  for (int c : ca) ++cell_size[c];
  int target = -1;
  for (int c = 0; c < colors; ++c) {
    if (cell_size[c] > 1 && (target == -1 || cell_size[c] < cell_size[target])) target = c;
  }
  int v = static_cast<int>(std::find(ca.begin(), ca.end(), target) - ca.begin());
  for (int w = 0; w < n; ++w) {
    if (cb[w] != target) continue;
    Coloring na = ca;
    Coloring nb = cb;
    na[v] = colors;
    nb[w] = colors;
    if (search(a, b, std::move(na), std::move(nb), mapping)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const int n = a.order();
  Coloring ca(n, 0);
  Coloring cb(n, 0);
  std::vector<int> mapping(n, -1);
  if (!search(a, b, ca, cb, mapping)) return std::nullopt;
  return mapping;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace mlcubic
