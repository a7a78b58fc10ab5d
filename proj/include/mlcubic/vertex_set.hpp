#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mlcubic {

/// Largest vertex count any Graph may hold.
inline constexpr int kMaxVertices = 128;

/// Fixed-width set of vertex indices in [0, kMaxVertices).
///
/// Neighbour iteration and set intersection dominate every search loop in this
/// library, so adjacency rows are stored as two machine words.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  /// The set {0, ..., n-1}.
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  void insert(int v) { words_[v >> 6] |= bit(v); }
  void erase(int v) { words_[v >> 6] &= ~bit(v); }
  [[nodiscard]] bool contains(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

  [[nodiscard]] int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  [[nodiscard]] bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Smallest member, or -1 when empty.
  [[nodiscard]] int first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  /// Smallest member strictly greater than v, or -1.
  [[nodiscard]] int next(int v) const {
    int from = v + 1;
    if (from >= kMaxVertices) return -1;
    int w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur != 0) return w * 64 + std::countr_zero(cur);
      if (++w >= kWords) return -1;
      cur = words_[w];
    }
  }

  [[nodiscard]] std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  [[nodiscard]] bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  [[nodiscard]] bool subset_of(const VertexSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };
  [[nodiscard]] iterator begin() const { return {this, first()}; }
  [[nodiscard]] iterator end() const { return {this, -1}; }

 private:
  static constexpr int kWords = kMaxVertices / 64;
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace mlcubic
