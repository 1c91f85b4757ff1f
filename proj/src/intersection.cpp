#include "hurwitz/intersection.hpp"

#include <numeric>

namespace hurwitz {

PsiExponentVector::PsiExponentVector(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.size() < 3) throw std::invalid_argument("genus-0 psi integrals need at least 3 points");
  for (int a : exponents_) {
    if (a < 0) throw std::invalid_argument("psi exponents must be nonnegative");
  }
}

int PsiExponentVector::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

Integer psi_integral_genus0(const PsiExponentVector& a) {
  const int dimension = a.points() - 3;
  if (a.degree() != dimension) return 0;
  Integer result = factorial(dimension);
  for (int e : a.exponents()) result /= factorial(e);
  return result;
}

Rational elsv_genus0(int d) {
  if (d == 1 || d == 2) throw DegenerateCase("degenerate case");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  Integer integral = 0;
  for_each_composition(d - 3, d, [&](std::span<const int> exponents) {
    integral += psi_integral_genus0(PsiExponentVector({exponents.begin(), exponents.end()}));
  });
  return Rational(factorial(2 * d - 2), factorial(d)) * integral;
}

}  // namespace hurwitz
