#pragma once

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Bivariate power series sum c(a, r) p^a t^r over exact rationals,
/// truncated at a <= a_max and r <= r_max. Products discard every term
/// beyond the bounds.
class TruncatedSeries {
 public:
  TruncatedSeries(int a_max, int r_max);

  static TruncatedSeries constant(int a_max, int r_max, const Rational& value);

  int a_max() const { return a_max_; }
  int r_max() const { return r_max_; }

  /// Throws std::out_of_range outside the truncation box.
  const Rational& operator()(int a, int r) const;
  Rational& operator()(int a, int r);

  const Rational& constant_term() const { return coeffs_.front(); }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(TruncatedSeries lhs, const Rational& rhs) { return lhs *= rhs; }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::size_t index(int a, int r) const;
  void require_same_shape(const TruncatedSeries& other) const;

  int a_max_;
  int r_max_;
  std::vector<Rational> coeffs_;
};

/// Formal logarithm. The constant term must be exactly 1.
TruncatedSeries log(const TruncatedSeries& series);

/// Formal exponential. The constant term must be exactly 0.
TruncatedSeries exp(const TruncatedSeries& series);

}  // namespace hurwitz
