#include "logcoef/gamma.hpp"

#include "logcoef/error.hpp"

namespace logcoef {

GammaVector log_coeffs(const TruncatedSeries& f, int n) {
  if (n < 0) throw DomainError("log_coeffs: negative count");
  if (f.order() < n + 1)
    throw DomainError("log_coeffs: need f through order " + std::to_string(n + 1) + ", have " +
                      std::to_string(f.order()));
  Real tol = exp2i(-(working_bits() - 16));
  if (abs(f[0]) > tol || abs(f[1] - Complex(1L)) > tol)
    throw DomainError("log_coeffs: series is not normalized (need a_0 = 0, a_1 = 1)");
  TruncatedSeries l = log_series(shift_down(f).truncated(n));
  std::vector<Complex> g;
  g.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) g.push_back(l[k] / 2L);
  return GammaVector(std::move(g));
}

GammaVector log_coeffs(const ClassMember& f, int n) { return log_coeffs(f.series(), n); }

Gamma123 gamma123_from_a(const Complex& a2, const Complex& a3, const Complex& a4) {
  Complex g1 = a2 / 2L;
  Complex g2 = (a3 - a2 * a2 / 2L) / 2L;
  Complex g3 = (a4 - a2 * a3 + a2 * a2 * a2 / 3L) / 2L;
  return {g1, g2, g3};
}

Gamma123 gamma123_janowski(const Complex& c1, const Complex& c2, const Complex& c3, const Real& a, const Real& b) {
  if (!(b >= Real(-1)) || !(b < a) || !(a <= Real(1))) throw DomainError("gamma123_janowski: need -1 <= B < A <= 1");
  Real amb = a - b;
  Real mu = (a - Real(5) * b) / 2L;
  Real nu = (Real(3) * b * b - a * b) / 2L;
  Complex g1 = c1 * amb / 4L;
  Complex g2 = (c1 * c1 * (a - Real(5) * b) + c2 * 4L) * amb / 48L;
  Complex g3 = (c3 + c1 * c2 * mu + c1 * c1 * c1 * nu) * amb / 24L;
  return {g1, g2, g3};
}

Gamma123 gamma123_robertson(const Complex& c1, const Complex& c2, const Complex& c3, const Real& alpha,
                            Prefactor prefactor) {
  ClassSpec spec = ClassSpec::robertson(alpha);  // validates alpha
  Complex a = spec.robertson_a();
  Complex one(1L);
  Complex k = (one + a) / (prefactor == Prefactor::derived ? 48L : 24L);
  Complex g1 = c1 * (one + a) / 4L;
  Complex g2 = k * ((Complex(5L) + a) * c1 * c1 + c2 * 4L);
  Complex g3 = k * (c3 * 2L + (Complex(5L) + a) * c1 * c2 + (Complex(3L) + a) * c1 * c1 * c1);
  return {g1, g2, g3};
}

}  // namespace logcoef
