#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace strata::strata {

/// Partial order on the indices 0..n-1 of an idempotent family, closed
/// reflexively and transitively from cover pairs (x, y) meaning x < y.
class Poset {
 public:
  Poset() = default;
  /// Throws algebra::ValidationError when the closure is not antisymmetric.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  static Poset antichain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x][y]; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq_[x][y]; }
  /// Cover pairs of the closure (x < y with nothing strictly between).
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// {x : x <= y}.
  std::vector<std::size_t> down_set(std::size_t y) const;
  bool is_initial_segment(const std::vector<std::size_t>& subset) const;
  /// All initial segments, ordered by size then lexicographically by index.
  std::vector<std::vector<std::size_t>> initial_segments() const;
  /// Maximal elements of a subset, ordered lexicographically by label.
  std::vector<std::size_t> maximal_elements(const std::vector<std::size_t>& subset) const;
  std::vector<std::size_t> maximal_elements() const;
  /// Induced order on members, reindexed 0..k-1 in the given order.
  Poset restrict(const std::vector<std::size_t>& members) const;

  std::string to_string() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

}  // namespace strata::strata
