#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Exponents (a_1, ..., a_n) of psi_1^a_1 ... psi_n^a_n on the moduli space
/// of genus-0 curves with n >= 3 marked points.
class PsiExponentVector {
 public:
  /// Throws std::invalid_argument if n < 3 or an exponent is negative.
  explicit PsiExponentVector(std::vector<int> exponents);

  std::span<const int> exponents() const { return exponents_; }
  int points() const { return static_cast<int>(exponents_.size()); }
  int degree() const;

 private:
  std::vector<int> exponents_;
};

/// Multinomial (n-3; a_1, ..., a_n) when the exponents sum to n - 3, else 0.
Integer psi_integral_genus0(const PsiExponentVector& a);

/// Raised by elsv_genus0 for the unstable cases d = 1, 2.
class DegenerateCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Genus-0 Hodge-integral formula: (2d-2)!/d! times the sum of all genus-0
/// psi integrals of total degree d - 3 over d marked points. Throws
/// DegenerateCase for d in {1, 2}.
Rational elsv_genus0(int d);

/// Calls visit(span<const int>) on every composition of total into `slots`
/// nonnegative parts, in lexicographically decreasing order.
template <class Visit>
void for_each_composition(int total, int slots, Visit&& visit) {
  if (total < 0 || slots < 1) return;
  std::vector<int> parts(static_cast<std::size_t>(slots), 0);
  parts.front() = total;
  for (;;) {
    visit(std::span<const int>(parts));
    // Move one unit from the rightmost nonzero non-final slot to its
    // neighbour, gathering everything after it into that neighbour.
    int pivot = slots - 2;
    while (pivot >= 0 && parts[static_cast<std::size_t>(pivot)] == 0) --pivot;
    if (pivot < 0) return;
    const int tail = parts.back();
    parts.back() = 0;
    --parts[static_cast<std::size_t>(pivot)];
    parts[static_cast<std::size_t>(pivot) + 1] = tail + 1;
  }
}

}  // namespace hurwitz
