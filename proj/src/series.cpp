#include "hurwitz/series.hpp"

#include <stdexcept>

namespace hurwitz {

TruncatedSeries::TruncatedSeries(int a_max, int r_max) : a_max_(a_max), r_max_(r_max) {
  if (a_max < 0 || r_max < 0) throw std::invalid_argument("truncation bounds must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(a_max + 1) * static_cast<std::size_t>(r_max + 1));
}

TruncatedSeries TruncatedSeries::constant(int a_max, int r_max, const Rational& value) {
  TruncatedSeries s(a_max, r_max);
  s(0, 0) = value;
  return s;
}

std::size_t TruncatedSeries::index(int a, int r) const {
  if (a < 0 || a > a_max_ || r < 0 || r > r_max_) throw std::out_of_range("series index outside truncation");
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(r_max_ + 1) + static_cast<std::size_t>(r);
}

const Rational& TruncatedSeries::operator()(int a, int r) const { return coeffs_[index(a, r)]; }
Rational& TruncatedSeries::operator()(int a, int r) { return coeffs_[index(a, r)]; }

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& other) const {
  if (a_max_ != other.a_max_ || r_max_ != other.r_max_) {
    throw std::invalid_argument("series truncations differ");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  lhs.require_same_shape(rhs);
  TruncatedSeries out(lhs.a_max_, lhs.r_max_);
  for (int a1 = 0; a1 <= lhs.a_max_; ++a1) {
    for (int r1 = 0; r1 <= lhs.r_max_; ++r1) {
      const Rational& x = lhs(a1, r1);
      if (x == 0) continue;
      for (int a2 = 0; a1 + a2 <= lhs.a_max_; ++a2) {
        for (int r2 = 0; r1 + r2 <= lhs.r_max_; ++r2) {
          const Rational& y = rhs(a2, r2);
          if (y != 0) out(a1 + a2, r1 + r2) += x * y;
        }
      }
    }
  }
  return out;
}

namespace {

// Every term of a series without constant term has total degree >= 1, so
// its k-th power vanishes once k exceeds a_max + r_max.
int nilpotency_bound(const TruncatedSeries& s) { return s.a_max() + s.r_max(); }

}  // namespace

TruncatedSeries log(const TruncatedSeries& series) {
  if (series.constant_term() != 1) throw std::domain_error("log requires constant term 1");
  TruncatedSeries u = series;
  u(0, 0) = 0;
  TruncatedSeries result(series.a_max(), series.r_max());
  TruncatedSeries u_power = u;
  for (int k = 1; k <= nilpotency_bound(series) && !u_power.is_zero(); ++k) {
    const Rational weight(k % 2 == 1 ? 1 : -1, k);
    result += u_power * weight;
    u_power = u_power * u;
  }
  return result;
}

TruncatedSeries exp(const TruncatedSeries& series) {
  if (series.constant_term() != 0) throw std::domain_error("exp requires constant term 0");
  TruncatedSeries result = TruncatedSeries::constant(series.a_max(), series.r_max(), 1);
  TruncatedSeries term = result;
  for (int k = 1; k <= nilpotency_bound(series) && !term.is_zero(); ++k) {
    term = term * series * Rational(1, k);
    result += term;
  }
  return result;
}

}  // namespace hurwitz
