#include "hurwitz/oracle.hpp"

#include <array>
#include <cstdint>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/character.hpp"

namespace hurwitz {

namespace {

constexpr int kMaxLetters = 8;

using Letters = std::array<std::uint8_t, kMaxLetters>;

struct UnionFind {
  Letters parent{};

  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, std::uint8_t{0}); }

  std::uint8_t find(std::uint8_t x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  // Returns true when two classes merged.
  bool unite(std::uint8_t a, std::uint8_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

struct Transposition {
  std::uint8_t i;
  std::uint8_t j;
};

class Enumerator {
 public:
  Enumerator(int d, int r) : d_(d), r_(r) {
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        transpositions_.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
      }
    }
  }

  Integer count() {
    if (r_ == 0) return d_ == 1 ? 1 : 0;
    Letters identity{};
    std::iota(identity.begin(), identity.begin() + d_, std::uint8_t{0});
    if (r_ == 1) return 0;
    // Independent subtrees, one per first transposition.
    std::vector<std::future<unsigned long long>> subtrees;
    for (const Transposition& t : transpositions_) {
      subtrees.push_back(std::async(std::launch::async, [this, identity, t] {
        Letters product = identity;
        std::swap(product[t.i], product[t.j]);
        UnionFind classes(d_);
        classes.unite(t.i, t.j);
        unsigned long long found = 0;
        descend(product, classes, d_ - 1, 2, found);
        return found;
      }));
    }
    Integer total = 0;
    for (auto& s : subtrees) total += s.get();
    return total;
  }

 private:
  // product holds tau_1 ... tau_k as a map on letters; components counts the
  // union-find classes of the transpositions chosen so far.
  void descend(const Letters& product, const UnionFind& classes, int components, int depth,
               unsigned long long& found) const {
    if (depth == r_) {
      // The final transposition is forced: the product so far must itself
      // be a transposition (it is its own inverse).
      int moved = 0;
      std::uint8_t first = 0;
      std::uint8_t second = 0;
      for (int x = 0; x < d_; ++x) {
        if (product[x] != x) {
          if (moved == 0) first = static_cast<std::uint8_t>(x);
          else second = static_cast<std::uint8_t>(x);
          if (++moved > 2) return;
        }
      }
      if (moved != 2) return;
      UnionFind last = classes;
      const int remaining = components - (last.unite(first, second) ? 1 : 0);
      if (remaining == 1) ++found;
      return;
    }
    for (const Transposition& t : transpositions_) {
      Letters next = product;
      std::swap(next[t.i], next[t.j]);
      UnionFind merged = classes;
      const int left = components - (merged.unite(t.i, t.j) ? 1 : 0);
      descend(next, merged, left, depth + 1, found);
    }
  }

  int d_;
  int r_;
  std::vector<Transposition> transpositions_;
};

}  // namespace

bool oracle_within_bound(int g, int d) {
  if (g < 0 || d < 1) return false;
  return d <= kOracleMaxDegree && branch_point_count(g, d) <= kOracleMaxBranchPoints;
}

Integer oracle_transitive_count(int d, int r) {
  if (d < 1 || r < 0) throw std::invalid_argument("oracle requires d >= 1 and r >= 0");
  if (d > kOracleMaxDegree || r > kOracleMaxBranchPoints) {
    throw std::out_of_range("oracle enumeration bound exceeded (d <= " + std::to_string(kOracleMaxDegree) +
                            ", r <= " + std::to_string(kOracleMaxBranchPoints) + ")");
  }
  return Enumerator(d, r).count();
}

Rational oracle_connected(int g, int d) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  return Rational(oracle_transitive_count(d, branch_point_count(g, d)), factorial(d));
}

}  // namespace hurwitz
