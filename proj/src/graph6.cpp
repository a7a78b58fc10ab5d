#include "mlcubic/graph6.hpp"

#include <vector>

namespace mlcubic {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kLongFormMax = 258047;

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(0, "empty input");

  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error(i, "character out of range");
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) throw Graph6Error(1, "8-byte order prefix not supported");
    if (text.size() < 4) throw Graph6Error(text.size(), "truncated order prefix");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kBias);
    if (n < 63) throw Graph6Error(1, "non-minimal order prefix");
    if (n > kLongFormMax) throw Graph6Error(1, "order exceeds 4-byte form");
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw Graph6Error(0, "order " + std::to_string(n) + " exceeds capacity " + std::to_string(kMaxVertices));
  }

  const long bits = n * (n - 1) / 2;
  const long need = (bits + 5) / 6;
  const long have = static_cast<long>(text.size() - pos);
  if (have < need) throw Graph6Error(text.size(), "adjacency data truncated");
  if (have > need) throw Graph6Error(pos + need, "trailing bytes after adjacency data");

  std::vector<VertexSet> rows(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  if (k % 6 != 0) {
    int byte = text[pos + k / 6] - kBias;
    int pad_mask = (1 << (6 - k % 6)) - 1;
    if (byte & pad_mask) throw Graph6Error(pos + k / 6, "nonzero padding bits");
  }
  return Graph::from_adjacency(std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

}  // namespace mlcubic
