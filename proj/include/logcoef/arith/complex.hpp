#pragma once

#include "logcoef/arith/real.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace logcoef {

/// Extended-precision complex number.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(Real::with_bits(re.bits())) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : Complex(Real(r)) {}
  Complex(long r) : Complex(Real(r)) {}
  Complex(double r) : Complex(Real(r)) {}
  Complex(double r, double i) : re(r), im(i) {}

  static Complex polar(const Real& modulus, const Real& angle);

  long bits() const { return std::max(re.bits(), im.bits()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
  Complex& operator*=(long o);
  Complex& operator/=(long o);

  /// this += a*b without heap temporaries; `scratch` must outlive the call.
  void add_product(const Complex& a, const Complex& b, Real& scratch);

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator*(Complex a, long b) { return a *= b; }
  friend Complex operator*(long b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, long b) { return a /= b; }
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
/// Principal argument in (-pi, pi].
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal logarithm: imaginary part in (-pi, pi]. Throws DomainError at 0.
Complex principal_log(const Complex& z);
/// exp(w * principal_log(z)). 0^w is 0 for Re w > 0 with Im w = 0, else DomainError.
Complex cpow(const Complex& z, const Complex& w);
Complex sqrt(const Complex& z);
/// e^{i(2pi - eps*pi)} built from cos(eps*pi) - i sin(eps*pi); 0 < eps < 2.
Complex boundary_point(const Real& eps);
/// 1 - boundary_point(eps) without the cancellation in 1 - cos.
Complex one_minus_boundary_point(const Real& eps);

std::string to_string(const Complex& z, int digits = 40);

}  // namespace logcoef
