#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mlcubic/graph.hpp"

namespace mlcubic {

/// Malformed graph6 input. offset() is the byte index (within the line, after
/// any header) where decoding failed.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. A leading ">>graph6<<" and trailing CR/LF are
/// tolerated. Supports the 1-byte and 4-byte order prefixes; the 8-byte form
/// and orders above kMaxVertices are rejected.
Graph parse_graph6(std::string_view text);

/// Canonical minimal-length encoding, no header, no newline.
std::string write_graph6(const Graph& g);

}  // namespace mlcubic
