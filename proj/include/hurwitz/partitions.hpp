#pragma once

#include <compare>
#include <span>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// An integer partition of d, stored as a weakly decreasing list of positive
/// parts. The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts arbitrary positive parts into canonical order.
  static Partition from_unordered(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of d in reverse-lexicographic order, starting at (d).
std::vector<Partition> enumerate_partitions(int d);

/// Dimension of the irreducible representation of S_d indexed by the
/// partition, via the hook-length formula.
Integer irrep_dimension(const Partition& shape);

/// Sum of j - i over the cells (i, j) of the Young diagram.
long content_sum(const Partition& shape);

}  // namespace hurwitz
