#pragma once

#include "logcoef/arith/complex.hpp"

#include <span>
#include <vector>

namespace logcoef {

/// Taylor polynomial c_0 + c_1 z + ... + c_N z^N standing for a power
/// series known through degree N. Binary operations on operands of
/// different order truncate to the smaller one.
class TruncatedSeries {
public:
  /// Order 0, value 0.
  TruncatedSeries();
  /// Throws DomainError on an empty coefficient list.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(const Complex& c, int order);
  static TruncatedSeries one(int order) { return constant(Complex(1L), order); }
  /// c * z^k through `order` (zero series when k > order).
  static TruncatedSeries monomial(int k, const Complex& c, int order);
  static TruncatedSeries identity(int order) { return monomial(1, Complex(1L), order); }
  /// Sum of z^n for n = 0..order.
  static TruncatedSeries geometric(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Complex& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  Complex& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  std::span<const Complex> coeffs() const { return c_; }

  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Complex& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Complex& s) { return a *= s; }
  friend TruncatedSeries operator*(const Complex& s, TruncatedSeries a) { return a *= s; }
  TruncatedSeries operator-() const;

private:
  std::vector<Complex> c_;
};

/// Cauchy product truncated at min(order a, order b).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
/// Multiplicative inverse; a[0] must be nonzero.
TruncatedSeries recip(const TruncatedSeries& a);
/// log(a) for a[0] = 1; result[0] = 0.
TruncatedSeries log_series(const TruncatedSeries& a);
/// exp(a) for a[0] = 0.
TruncatedSeries exp_series(const TruncatedSeries& a);
/// a^w for a[0] = 1 (principal branch at the constant term).
TruncatedSeries pow_series(const TruncatedSeries& a, const Complex& w);
/// outer(inner(z)) for inner[0] = 0, truncated at the common order.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
/// d/dz; order drops by one (order-0 input gives the zero series of order 0).
TruncatedSeries derive(const TruncatedSeries& a);
/// sum_{n>=1} a_n z^n  ->  sum_{n>=1} (a_n / n) z^n, i.e. the integral of a(t)/t from 0.
TruncatedSeries integrate_div_t(const TruncatedSeries& a);
/// z * a; order grows by one.
TruncatedSeries shift_up(const TruncatedSeries& a);
/// a / z for a[0] = 0; order drops by one.
TruncatedSeries shift_down(const TruncatedSeries& a);

/// Largest coefficient-wise |a_n - b_n| over the common order.
Real max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);
/// Evaluates the polynomial at z (Horner).
Complex evaluate(const TruncatedSeries& a, const Complex& z);

}  // namespace logcoef
