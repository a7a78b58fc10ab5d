#pragma once

#include <optional>
#include <vector>

#include "mlcubic/graph.hpp"

namespace mlcubic {

/// A bijection m with a.adjacent(u,v) == b.adjacent(m[u],m[v]), if one exists.
/// Joint colour refinement on both graphs, then individualisation with
/// backtracking over the smallest non-trivial cell.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace mlcubic
