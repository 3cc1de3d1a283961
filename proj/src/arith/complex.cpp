#include "logcoef/arith/complex.hpp"

#include "logcoef/error.hpp"

namespace logcoef {

Complex Complex::polar(const Real& modulus, const Real& angle) {
  Real s = Real::with_bits(angle.bits());
  Real c = Real::with_bits(angle.bits());
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {modulus * c, modulus * s};
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re /= o;
  im /= o;
  return *this;
}

Complex& Complex::operator*=(long o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(long o) {
  re /= o;
  im /= o;
  return *this;
}

void Complex::add_product(const Complex& a, const Complex& b, Real& scratch) {
  mpfr_fmms(scratch.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(re.get(), re.get(), scratch.get(), MPFR_RNDN);
  mpfr_fmma(scratch.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(im.get(), im.get(), scratch.get(), MPFR_RNDN);
}

Complex operator*(const Complex& a, const Complex& b) {
  long p = std::max(a.bits(), b.bits());
  Complex r{Real::with_bits(p), Real::with_bits(p)};
  mpfr_fmms(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(r.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.is_zero()) throw DomainError("complex division by zero");
  long p = std::max(a.bits(), b.bits());
  Real den = Real::with_bits(p);
  mpfr_fmma(den.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  Complex r{Real::with_bits(p), Real::with_bits(p)};
  mpfr_fmma(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(r.im.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  r.re /= den;
  r.im /= den;
  return r;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Real norm(const Complex& z) {
  Real r = Real::with_bits(z.bits());
  mpfr_fmma(r.get(), z.re.get(), z.re.get(), z.im.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) {
  // atan2(-0, x<0) is -pi in MPFR; the principal branch wants +pi.
  if (z.im.is_zero() && z.re.sign() < 0) return pi(z.bits());
  return atan2(z.im, z.re);
}

Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }

Complex principal_log(const Complex& z) {
  if (z.is_zero()) throw DomainError("logarithm of zero");
  if (!z.is_finite()) throw DomainError("logarithm of a non-finite value");
  return {log(abs(z)), arg(z)};
}

Complex cpow(const Complex& z, const Complex& w) {
  if (z.is_zero()) {
    if (w.im.is_zero() && w.re.sign() > 0) return Complex(Real::with_bits(z.bits()));
    throw DomainError("zero base with exponent that is not a positive real");
  }
  return exp(w * principal_log(z));
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  return Complex::polar(sqrt(abs(z)), arg(z) / 2L);
}

namespace {
void check_eps(const Real& eps) {
  if (!(eps > Real(0)) || !(eps < Real(2)))
    throw DomainError("boundary parameter eps must lie in (0, 2), got " + eps.str(12));
}
}  // namespace

Complex boundary_point(const Real& eps) {
  check_eps(eps);
  Real t = eps * pi(eps.bits());
  Real s = Real::with_bits(t.bits());
  Real c = Real::with_bits(t.bits());
  mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
  return {c, -s};
}

Complex one_minus_boundary_point(const Real& eps) {
  check_eps(eps);
  Real t = eps * pi(eps.bits());
  Real half = sin(t / 2L);
  return {2L * half * half, sin(t)};
}

std::string to_string(const Complex& z, int digits) {
  return "(" + z.re.str(digits) + ", " + z.im.str(digits) + ")";
}

}  // namespace logcoef
