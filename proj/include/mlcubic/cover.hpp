#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "mlcubic/exact.hpp"
#include "mlcubic/graph.hpp"

namespace mlcubic {

/// Paths with at least this many vertices are long, shorter ones short.
inline constexpr int kShortThreshold = 18;

/// Ordered vertex-disjoint paths. Validity against a graph is checked with
/// is_cover_of, not on construction.
class VdpCover {
 public:
  explicit VdpCover(std::vector<std::vector<int>> paths, int threshold = kShortThreshold);

  [[nodiscard]] const std::vector<std::vector<int>>& paths() const { return paths_; }
  [[nodiscard]] int size() const { return static_cast<int>(paths_.size()); }
  [[nodiscard]] int threshold() const { return threshold_; }
  [[nodiscard]] bool is_short(int i) const { return static_cast<int>(paths_[i].size()) < threshold_; }
  [[nodiscard]] int short_count() const;
  [[nodiscard]] int long_count() const { return size() - short_count(); }
  [[nodiscard]] long long sum_squares() const;

  /// Set once the cardinality is known to equal the path cover number.
  [[nodiscard]] bool minimum() const { return minimum_; }
  void set_minimum(bool m) { minimum_ = m; }
  /// Size of the cover this one was derived from (itself when fresh).
  [[nodiscard]] int initial_size() const { return initial_size_; }
  void set_initial_size(int s) { initial_size_ = s; }

  [[nodiscard]] bool is_cover_of(const Graph& g) const;

  std::vector<std::vector<int>>& mutable_paths() { return paths_; }

 private:
  std::vector<std::vector<int>> paths_;
  int threshold_;
  bool minimum_ = false;
  int initial_size_;
};

/// Greedy peeling: from the smallest uncovered vertex, walk to the smallest
/// uncovered neighbour until stuck, then extend the other end the same way.
VdpCover initial_vdp_cover(const Graph& g, int threshold = kShortThreshold);

/// Endvertex of paths[target] is adjacent to donor[pos]; the donor's part from
/// pos towards one end moves onto the target. k = vertices moved; moving the
/// whole donor merges the two paths.
struct Exchange {
  int target = 0;
  bool target_back = true;  ///< join at the last vertex of the target (else the first)
  int donor = 0;
  int pos = 0;
  bool toward_back = true;  ///< move donor[pos..end] (else donor[0..pos], reversed)
  int k = 0;
  long long gain = 0;
};

/// (q + k)^2 + (p - k)^2 - q^2 - p^2 = 2k^2 + 2k(q - p).
long long exchange_gain(long long q, long long p, long long k);

/// Best-gain move with |donor| <= |target|; ties go to the first in scan order.
std::optional<Exchange> find_exchange(const Graph& g, const VdpCover& c);

VdpCover apply_exchange(const VdpCover& c, const Exchange& move);

/// Applies exchanges until none remains. With exact_mu the cover is first
/// replaced by a minimum one from the exact search if it is larger, and the
/// result is marked minimum. Throws std::invalid_argument if exact_mu is not
/// achievable or is undercut.
VdpCover optimize_cover(const Graph& g, const VdpCover& c, std::optional<int> exact_mu = std::nullopt);

class CoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class LongPathError : public CoverError {
 public:
  using CoverError::CoverError;
};
class NoAttachmentError : public CoverError {
 public:
  using CoverError::CoverError;
};

struct AttachmentPlan {
  std::vector<int> path;  ///< on the vertex set of the original path, starting at the anchor
  int anchor = -1;
  int external = -1;      ///< neighbour of the anchor outside the path
  bool rerouted = false;  ///< false when the original path (possibly reversed) is used
};

/// Short path i reorganised so that its first vertex has a neighbour outside
/// it. The external neighbour is taken in the longest other path. Throws
/// LongPathError or NoAttachmentError.
AttachmentPlan reroute_short_path(const Graph& g, const VdpCover& c, int i);

struct CoverReport {
  int n = 0;
  int initial_size = 0;
  int final_size = 0;
  long long final_sum_squares = 0;
  int short_count = 0;
  int long_count = 0;
  SpanningTree tree;
  int leaf_count = 0;
  /// s + 2l; with no long path the last short path keeps both ends, so s + 1.
  int bound_s_plus_2l = 0;
  boost::rational<long long> bound_13_85;
  bool minimum_cover = false;
  bool all_short_attached = false;
  bool certified = false;
  std::vector<std::string> notes;  ///< reasons certification failed
};

/// Joins short paths in increasing length (ties by index) at the endvertex of
/// a rerouted path, then adds edges greedily to connect the rest.
CoverReport cover_to_tree(const Graph& g, const VdpCover& c);

/// initial_vdp_cover, optimize_cover, cover_to_tree.
CoverReport run_cover_procedure(const Graph& g, std::optional<int> exact_mu = std::nullopt,
                                int threshold = kShortThreshold);

}  // namespace mlcubic
