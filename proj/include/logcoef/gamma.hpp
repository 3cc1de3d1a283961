#pragma once

#include "logcoef/classes.hpp"
#include "logcoef/series.hpp"

#include <vector>

namespace logcoef {

/// Logarithmic coefficients: log(f(z)/z) = 2 sum_{n>=1} gamma_n z^n.
class GammaVector {
public:
  explicit GammaVector(std::vector<Complex> g) : g_(std::move(g)) {}
  /// 1-based.
  const Complex& operator()(int n) const { return g_.at(static_cast<std::size_t>(n - 1)); }
  int size() const { return static_cast<int>(g_.size()); }

private:
  std::vector<Complex> g_;
};

/// gamma_1..gamma_n of a normalized series (a_0 = 0, a_1 = 1); needs f
/// through order n + 1.
GammaVector log_coeffs(const TruncatedSeries& f, int n);
GammaVector log_coeffs(const ClassMember& f, int n);

struct Gamma123 {
  Complex g1;
  Complex g2;
  Complex g3;
};

/// From Taylor coefficients: gamma_1 = a2/2, gamma_2 = (a3 - a2^2/2)/2,
/// gamma_3 = (a4 - a2 a3 + a2^3/3)/2.
Gamma123 gamma123_from_a(const Complex& a2, const Complex& a3, const Complex& a4);

/// Janowski class in terms of the Schwarz coefficients c1, c2, c3.
Gamma123 gamma123_janowski(const Complex& c1, const Complex& c2, const Complex& c3, const Real& a, const Real& b);

enum class Prefactor {
  derived,  ///< (1 + A)/48, what the a_n -> gamma_n substitution gives
  printed,  ///< (1 + A)/24, as the formulas were originally published
};

/// Robertson class, A = e^{-2 i alpha}:
/// gamma_2 = k ((5 + A) c1^2 + 4 c2), gamma_3 = k (2 c3 + (5 + A) c1 c2 + (3 + A) c1^3),
/// k = (1 + A)/48 (derived) or (1 + A)/24 (printed).
Gamma123 gamma123_robertson(const Complex& c1, const Complex& c2, const Complex& c3, const Real& alpha,
                            Prefactor prefactor = Prefactor::derived);

}  // namespace logcoef
