#include "mlcubic/generate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "mlcubic/properties.hpp"

namespace mlcubic {

namespace {

using Mask = std::uint32_t;
using Rows = std::array<Mask, kMaxGeneratedOrder>;

Mask above(int i) { return i + 1 >= 32 ? 0 : ~((Mask{2} << i) - 1); }

// -1 if a < b, 0 if equal, 1 if a > b, comparing the adjacency strings
// position by position from the lowest bit.
int compare_rows(Mask a, Mask b) {
  Mask d = a ^ b;
  if (d == 0) return 0;
  return (a & (d & (~d + 1))) ? 1 : -1;
}

// Searches breadth-first-style relabelings for one whose adjacency string
// beats the identity. Only such relabelings can attain the maximum: rows
// before i fix which vertices carry labels below m, and a row's string is
// largest when its unlabeled neighbours take the next free labels.
class MaxCodeTester {
 public:
  MaxCodeTester(int n, const Rows& adj) : n_(n), adj_(adj) {
    label_.fill(-1);
    for (int v = 0; v < n_; ++v) own_row_[v] = adj_[v] & above(v);
  }

  bool canonical() { return !beaten(0, 0); }

 private:
  int n_;
  const Rows& adj_;
  Rows own_row_{};
  std::array<int, kMaxGeneratedOrder> label_{};
  std::array<int, kMaxGeneratedOrder> order_{};
  Mask labelled_ = 0;

  bool beaten(int i, int m) {
    if (i == n_) return false;
    if (i < m) return try_row(i, m, order_[i]);
    bool isolated_tried = false;
    for (int u = 0; u < n_; ++u) {
      if (labelled_ >> u & 1) continue;
      if (adj_[u] == 0) {
        if (isolated_tried) continue;
        isolated_tried = true;
      }
      assign(u, m);
      bool hit = try_row(i, m + 1, u);
      unassign(u);
      if (hit) return true;
    }
    return false;
  }

  bool try_row(int i, int m, int u) {
    Mask row = 0;
    std::array<int, 4> fresh{};
    int t = 0;
    for (Mask rest = adj_[u]; rest; rest &= rest - 1) {
      int w = std::countr_zero(rest);
      if (label_[w] < 0) {
        if (t == static_cast<int>(fresh.size())) return try_row_wide(i, m, u);
        fresh[t++] = w;
      } else if (label_[w] > i) {
        row |= Mask{1} << label_[w];
      }
    }
    if (t > 0) row |= ((Mask{1} << t) - 1) << m;
    int cmp = compare_rows(row, own_row_[i]);
    if (cmp > 0) return true;
    if (cmp < 0) return false;
    std::sort(fresh.begin(), fresh.begin() + t);
    do {
      for (int k = 0; k < t; ++k) assign(fresh[k], m + k);
      bool hit = beaten(i + 1, m + t);
      for (int k = 0; k < t; ++k) unassign(fresh[k]);
      if (hit) return true;
    } while (std::next_permutation(fresh.begin(), fresh.begin() + t));
    return false;
  }

  // Same as try_row for vertices with more than four unlabeled neighbours.
  bool try_row_wide(int i, int m, int u) {
    Mask row = 0;
    std::vector<int> fresh;
    for (Mask rest = adj_[u]; rest; rest &= rest - 1) {
      int w = std::countr_zero(rest);
      if (label_[w] < 0)
        fresh.push_back(w);
      else if (label_[w] > i)
        row |= Mask{1} << label_[w];
    }
    int t = static_cast<int>(fresh.size());
    row |= ((Mask{1} << t) - 1) << m;
    int cmp = compare_rows(row, own_row_[i]);
    if (cmp > 0) return true;
    if (cmp < 0) return false;
    do {
      for (int k = 0; k < t; ++k) assign(fresh[k], m + k);
      bool hit = beaten(i + 1, m + t);
      for (int k = 0; k < t; ++k) unassign(fresh[k]);
      if (hit) return true;
    } while (std::next_permutation(fresh.begin(), fresh.end()));
    return false;
  }

  void assign(int v, int l) {
    label_[v] = l;
    order_[l] = v;
    labelled_ |= Mask{1} << v;
  }
  void unassign(int v) {
    label_[v] = -1;
    labelled_ &= ~(Mask{1} << v);
  }
};

class OrderlyGenerator {
 public:
  OrderlyGenerator(const GenerationSpec& spec, const GraphSink& sink)
      : spec_(spec), sink_(sink), full_((Mask{1} << spec.n) - 1) {
    split_edges_ = std::max(1, spec.n * spec.min_degree / 4);
  }

  std::uint64_t run() {
    visit(0, 0);
    return emitted_;
  }

 private:
  const GenerationSpec& spec_;
  const GraphSink& sink_;
  Mask full_;
  Rows adj_{};
  std::array<int, kMaxGeneratedOrder> deg_{};
  int edges_ = 0;
  int split_edges_ = 1;
  std::uint64_t split_index_ = 0;
  std::uint64_t emitted_ = 0;

  bool mine() const {
    return spec_.shard.modulus == 1 ||
           (edges_ < split_edges_ ? spec_.shard.residue == 0 : true);
  }

  // A component whose vertices are all saturated can never grow.
  bool saturated_component_blocks() const {
    if (!spec_.connected) return false;
    Mask seen = 1, frontier = 1;
    bool all_full = true;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (deg_[v] < spec_.max_degree) all_full = false;
      Mask next = adj_[v] & ~seen;
      seen |= next;
      frontier |= next;
    }
    return all_full && seen != full_;
  }

  bool connected_now() const {
    Mask seen = 1, frontier = 1;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask next = adj_[v] & ~seen;
      seen |= next;
      frontier |= next;
    }
    return seen == full_;
  }

  void emit_if_complete() {
    const int n = spec_.n;
    for (int v = 0; v < n; ++v)
      if (deg_[v] < spec_.min_degree) return;
    if (spec_.connected && !connected_now()) return;
    if (!mine()) return;
    std::vector<VertexSet> rows(n);
    for (int v = 0; v < n; ++v)
      for (Mask rest = adj_[v]; rest; rest &= rest - 1) rows[v].insert(std::countr_zero(rest));
    sink_(Graph::from_adjacency(std::move(rows)));
    ++emitted_;
  }

  // (r, c) is the position of the last edge added; (0, 0) for the empty graph.
  void visit(int r, int c) {
    emit_if_complete();
    const int n = spec_.n;
    for (int row = r; row < n - 1; ++row) {
      if (row > r && deg_[row - 1] < spec_.min_degree) return;
      if (deg_[row] >= spec_.max_degree) continue;
      for (int col = (row == r && edges_ > 0) ? c + 1 : row + 1; col < n; ++col) {
        if (deg_[col] >= spec_.max_degree) continue;
        if (deg_[row] + 1 + (n - 1 - col) < spec_.min_degree) break;
        add(row, col);
        if (accept()) {
          bool keep = true;
          if (edges_ == split_edges_ && spec_.shard.modulus > 1)
            keep = split_index_++ % spec_.shard.modulus ==
                   static_cast<std::uint64_t>(spec_.shard.residue);
          if (keep) visit(row, col);
        }
        remove(row, col);
      }
    }
  }

  bool accept() {
    if (saturated_component_blocks()) return false;
    MaxCodeTester tester(spec_.n, adj_);
    return tester.canonical();
  }

  void add(int u, int v) {
    adj_[u] |= Mask{1} << v;
    adj_[v] |= Mask{1} << u;
    ++deg_[u];
    ++deg_[v];
    ++edges_;
  }
  void remove(int u, int v) {
    adj_[u] &= ~(Mask{1} << v);
    adj_[v] &= ~(Mask{1} << u);
    --deg_[u];
    --deg_[v];
    --edges_;
  }
};

void check_shard(Shard s) {
  if (s.modulus < 1 || s.residue < 0 || s.residue >= s.modulus)
    throw std::invalid_argument("shard residue must lie in [0, modulus)");
}

}  // namespace

std::uint64_t generate_graphs(const GenerationSpec& spec, const GraphSink& sink) {
  if (spec.n < 1 || spec.n > kMaxGeneratedOrder)
    throw std::invalid_argument("order must lie in [1, " + std::to_string(kMaxGeneratedOrder) + "]");
  if (spec.min_degree < 0 || spec.max_degree < spec.min_degree || spec.max_degree >= spec.n + (spec.n == 1))
    throw std::invalid_argument("degree range must satisfy 0 <= min <= max < n");
  check_shard(spec.shard);
  OrderlyGenerator gen(spec, sink);
  return gen.run();
}

std::uint64_t generate_cubic(int n, int min_conn, const GraphSink& sink, Shard shard) {
  if (n < 4 || n > 20) throw std::invalid_argument("cubic generation supports 4 <= n <= 20");
  if (min_conn < 1 || min_conn > 3) throw std::invalid_argument("min_conn must be 1, 2 or 3");
  check_shard(shard);
  if (n % 2 != 0) return 0;
  std::uint64_t count = 0;
  generate_graphs({n, 3, 3, true, shard}, [&](const Graph& g) {
    if (min_conn > 1 && vertex_connectivity_capped(g, min_conn) < min_conn) return;
    ++count;
    sink(g);
  });
  return count;
}

std::uint64_t generate_degree23(int n, const GraphSink& sink, Shard shard) {
  if (n < 3 || n > 13) throw std::invalid_argument("degree-{2,3} generation supports 3 <= n <= 13");
  return generate_graphs({n, 2, std::min(3, n - 1), false, shard}, sink);
}

bool is_max_code_canonical(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGeneratedOrder) throw std::invalid_argument("order too large for the code test");
  Rows adj{};
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  MaxCodeTester tester(n, adj);
  return tester.canonical();
}

}  // namespace mlcubic
