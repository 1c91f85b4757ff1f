#include "hurwitz/character.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "hurwitz/partitions.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

int branch_point_count(int g, int d) { return 2 * g - 2 + 2 * d; }

Integer factorization_count(int d, int r) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (r < 0) throw std::invalid_argument("number of transpositions must be nonnegative");
  Integer total = 0;
  for (const Partition& shape : enumerate_partitions(d)) {
    const Integer dim = irrep_dimension(shape);
    total += dim * dim * boost::multiprecision::pow(Integer(content_sum(shape)), static_cast<unsigned>(r));
  }
  const Integer order = factorial(d);
  if (total % order != 0) {
    throw std::logic_error("character sum for (d=" + std::to_string(d) + ", r=" + std::to_string(r) +
                           ") is not divisible by d!");
  }
  return total / order;
}

namespace {

class DisconnectedCache {
 public:
  Rational get(int d, int r) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find({d, r}); it != values_.end()) return it->second;
    }
    Rational value(factorization_count(d, r), factorial(d));
    std::unique_lock lock(mutex_);
    return values_.try_emplace({d, r}, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, Rational> values_;
};

DisconnectedCache& disconnected_cache() {
  static DisconnectedCache cache;
  return cache;
}

}  // namespace

Rational disconnected_hurwitz(int d, int r) { return disconnected_cache().get(d, r); }

Rational connected_hurwitz(int g, int d) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  const int r = branch_point_count(g, d);

  // Generating series: ordinary in p (degree), exponential in t (branch points).
  TruncatedSeries all_covers = TruncatedSeries::constant(d, r, 1);
  for (int a = 1; a <= d; ++a) {
    for (int k = 0; k <= r; k += 2) {
      all_covers(a, k) = disconnected_hurwitz(a, k) / factorial(k);
    }
  }
  const TruncatedSeries connected = log(all_covers);
  return connected(d, r) * factorial(r);
}

}  // namespace hurwitz
