#include "logcoef/arith/jet.hpp"

#include "logcoef/error.hpp"

namespace logcoef {

Jet2 Jet2::constant(const Complex& c) {
  Complex zero(Real::with_bits(c.bits()));
  return {c, zero, zero};
}

Jet2 Jet2::variable(const Complex& z0) {
  Complex zero(Real::with_bits(z0.bits()));
  Complex one(Real(1L));
  return {z0, one, zero};
}

Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.f + b.f, a.df + b.df, a.d2f + b.d2f}; }

Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.f - b.f, a.df - b.df, a.d2f - b.d2f}; }

Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.f * b.f, a.df * b.f + a.f * b.df, a.d2f * b.f + 2L * (a.df * b.df) + a.f * b.d2f};
}

Jet2 operator*(const Jet2& a, const Complex& s) { return {a.f * s, a.df * s, a.d2f * s}; }
Jet2 operator*(const Complex& s, const Jet2& a) { return a * s; }

Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.f.is_zero()) throw DomainError("jet division by a zero-valued jet");
  Complex q = a.f / b.f;
  Complex dq = (a.df - q * b.df) / b.f;
  Complex d2q = (a.d2f - 2L * (dq * b.df) - q * b.d2f) / b.f;
  return {q, dq, d2q};
}

Jet2 log(const Jet2& a) {
  if (a.f.is_zero()) throw DomainError("log of a zero-valued jet");
  Complex r = a.df / a.f;
  return {principal_log(a.f), r, a.d2f / a.f - r * r};
}

Jet2 pow(const Jet2& a, const Complex& w) {
  if (a.f.is_zero()) throw DomainError("power of a zero-valued jet");
  Complex h = cpow(a.f, w);
  Complex r = a.df / a.f;
  Complex dh = w * h * r;
  // h'' = w h [ (w-1) r^2 + f''/f ]
  Complex d2h = w * h * ((w - Complex(1L)) * r * r + a.d2f / a.f);
  return {h, dh, d2h};
}

Jet2 jet_eval_ops(const Jet2& a, const Jet2& b, JetOp op, const Complex& w) {
  switch (op) {
    case JetOp::add: return a + b;
    case JetOp::mul: return a * b;
    case JetOp::div: return a / b;
    case JetOp::log: return log(a);
    case JetOp::pow: return pow(a, w);
  }
  throw DomainError("unknown jet operation");
}

}  // namespace logcoef
