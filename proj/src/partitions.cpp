#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unordered(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> columns;
  if (!parts_.empty()) {
    columns.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int row : parts_) {
      for (int j = 0; j < row; ++j) ++columns[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(columns));
}

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> result;
  if (d == 0) {
    result.emplace_back();
    return result;
  }
  std::vector<int> current{d};
  for (;;) {
    result.emplace_back(current);
    // Strip trailing ones, decrement the last part > 1, and refill with the
    // largest parts allowed.
    int freed = 0;
    while (!current.empty() && current.back() == 1) {
      current.pop_back();
      ++freed;
    }
    if (current.empty()) break;
    const int part = --current.back();
    ++freed;
    while (freed > 0) {
      const int next = std::min(part, freed);
      current.push_back(next);
      freed -= next;
    }
  }
  return result;
}

Integer irrep_dimension(const Partition& shape) {
  const Partition columns = shape.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < shape.length(); ++i) {
    const int row = shape.parts()[static_cast<std::size_t>(i)];
    for (int j = 0; j < row; ++j) {
      const int arm = row - j - 1;
      const int leg = columns.parts()[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(shape.size()) / hooks;
}

long content_sum(const Partition& shape) {
  long total = 0;
  for (int i = 0; i < shape.length(); ++i) {
    const long row = shape.parts()[static_cast<std::size_t>(i)];
    // Row i contributes (0 + 1 + ... + row-1) - i*row.
    total += row * (row - 1) / 2 - static_cast<long>(i) * row;
  }
  return total;
}

}  // namespace hurwitz
