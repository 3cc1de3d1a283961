#pragma once

#include "logcoef/arith/complex.hpp"

namespace logcoef {

/// Value, first and second derivative of an analytic function at a fixed
/// point. Arithmetic follows the first/second order chain rules.
struct Jet2 {
  Complex f;
  Complex df;
  Complex d2f;

  static Jet2 constant(const Complex& c);
  /// The identity function z at z0: (z0, 1, 0).
  static Jet2 variable(const Complex& z0);

  Jet2 operator-() const { return {-f, -df, -d2f}; }
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Complex& s);
Jet2 operator*(const Complex& s, const Jet2& a);
/// Throws DomainError when b.f == 0.
Jet2 operator/(const Jet2& a, const Jet2& b);
/// Principal log; throws DomainError when a.f == 0.
Jet2 log(const Jet2& a);
/// a^w on the principal branch; throws DomainError when a.f == 0.
Jet2 pow(const Jet2& a, const Complex& w);

enum class JetOp { add, mul, div, log, pow };

/// Dispatcher over the jet operations; `b` is ignored by log and pow.
Jet2 jet_eval_ops(const Jet2& a, const Jet2& b, JetOp op, const Complex& w = Complex(0));

}  // namespace logcoef
