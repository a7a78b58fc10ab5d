#pragma once

#include <cstdint>
#include <functional>

#include "mlcubic/graph.hpp"

namespace mlcubic {

using GraphSink = std::function<void(const Graph&)>;

/// Splits a generation run into `modulus` disjoint parts; part `residue`
/// keeps the subtrees whose index at the split level is congruent to it.
/// The union over all residues is the unsharded output.
struct Shard {
  int residue = 0;
  int modulus = 1;
};

struct GenerationSpec {
  int n = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  Shard shard{};
};

/// Largest order accepted by generate_graphs.
inline constexpr int kMaxGeneratedOrder = 24;

/// Orderly generation: one graph per isomorphism class with every degree in
/// [min_degree, max_degree]. Graphs are emitted in their canonical labeling,
/// the one whose upper-triangle adjacency string read row by row is
/// lexicographically largest. Throws std::invalid_argument for n outside
/// [1, kMaxGeneratedOrder] or a bad degree range or shard.
std::uint64_t generate_graphs(const GenerationSpec& spec, const GraphSink& sink);

/// Connected cubic graphs on n vertices with vertex connectivity at least
/// min_conn (1, 2 or 3). Odd n yields nothing. Requires 4 <= n <= 20.
std::uint64_t generate_cubic(int n, int min_conn, const GraphSink& sink, Shard shard = {});

/// All graphs, connected or not, whose degrees lie in {2, 3}. Requires
/// 3 <= n <= 13.
std::uint64_t generate_degree23(int n, const GraphSink& sink, Shard shard = {});

/// True iff the identity labeling of g already has the largest row-major
/// upper-triangle adjacency string among all relabelings.
bool is_max_code_canonical(const Graph& g);

}  // namespace mlcubic
