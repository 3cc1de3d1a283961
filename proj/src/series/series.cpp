#include "logcoef/series.hpp"

#include "logcoef/error.hpp"

#include <algorithm>
#include <string>

namespace logcoef {

namespace {

Complex zero_complex() { return Complex(Real()); }

// Loose test for "exactly 1" / "exactly 0" constant terms that arrive from
// earlier floating computations.
bool near(const Complex& z, long target) {
  Real tol = exp2i(-(working_bits() - 16));
  Complex d = z - Complex(Real(target));
  return abs(d) <= tol;
}

int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries::TruncatedSeries() : c_(1, zero_complex()) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1, zero_complex()));
}

TruncatedSeries TruncatedSeries::constant(const Complex& c, int order) {
  TruncatedSeries s = zero(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int k, const Complex& c, int order) {
  TruncatedSeries s = zero(order);
  if (k >= 0 && k <= order) s[k] = c;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(int order) {
  return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1, Complex(1L)));
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order())
    throw DomainError("cannot extend a series from order " + std::to_string(this->order()) + " to " +
                      std::to_string(order));
  return TruncatedSeries(std::vector<Complex>(c_.begin(), c_.begin() + order + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  c_.resize(static_cast<std::size_t>(common_order(*this, o)) + 1);
  for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  c_.resize(static_cast<std::size_t>(common_order(*this, o)) + 1);
  for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Complex& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n_max = common_order(a, b);
  TruncatedSeries r = TruncatedSeries::zero(n_max);
  Real scratch;
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) r[n].add_product(a[k], b[n - k], scratch);
  return r;
}

TruncatedSeries recip(const TruncatedSeries& a) {
  if (a[0].is_zero()) throw DomainError("recip: vanishing constant term");
  const int n_max = a.order();
  TruncatedSeries r = TruncatedSeries::zero(n_max);
  Complex inv0 = Complex(1L) / a[0];
  r[0] = inv0;
  Real scratch;
  for (int n = 1; n <= n_max; ++n) {
    Complex acc = zero_complex();
    for (int k = 1; k <= n; ++k) acc.add_product(a[k], r[n - k], scratch);
    r[n] = -(acc * inv0);
  }
  return r;
}

TruncatedSeries log_series(const TruncatedSeries& a) {
  if (!near(a[0], 1)) throw DomainError("log_series: constant term must be 1");
  const int n_max = a.order();
  TruncatedSeries r = TruncatedSeries::zero(n_max);
  std::vector<Complex> k_l(static_cast<std::size_t>(n_max) + 1, zero_complex());
  Real scratch;
  // n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
  for (int n = 1; n <= n_max; ++n) {
    Complex acc = a[n] * static_cast<long>(n);
    Complex sub = zero_complex();
    for (int k = 1; k < n; ++k) sub.add_product(k_l[static_cast<std::size_t>(k)], a[n - k], scratch);
    acc -= sub;
    k_l[static_cast<std::size_t>(n)] = acc;
    r[n] = acc / static_cast<long>(n);
  }
  return r;
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
  if (!near(a[0], 0)) throw DomainError("exp_series: constant term must be 0");
  const int n_max = a.order();
  TruncatedSeries r = TruncatedSeries::zero(n_max);
  r[0] = Complex(1L);
  std::vector<Complex> k_a(static_cast<std::size_t>(n_max) + 1, zero_complex());
  for (int k = 1; k <= n_max; ++k) k_a[static_cast<std::size_t>(k)] = a[k] * static_cast<long>(k);
  Real scratch;
  // n e_n = sum_{k=1}^{n} k a_k e_{n-k}
  for (int n = 1; n <= n_max; ++n) {
    Complex acc = zero_complex();
    for (int k = 1; k <= n; ++k) acc.add_product(k_a[static_cast<std::size_t>(k)], r[n - k], scratch);
    r[n] = acc / static_cast<long>(n);
  }
  return r;
}

TruncatedSeries pow_series(const TruncatedSeries& a, const Complex& w) {
  if (!near(a[0], 1)) throw DomainError("pow_series: constant term must be 1");
  const int n_max = a.order();
  TruncatedSeries r = TruncatedSeries::zero(n_max);
  r[0] = Complex(1L);
  Real scratch;
  // From a p' = w a' p:  n p_n = w * sum k a_k p_{n-k} - sum (n-k) a_k p_{n-k}.
  for (int n = 1; n <= n_max; ++n) {
    Complex s1 = zero_complex();
    Complex s2 = zero_complex();
    for (int k = 1; k <= n; ++k) {
      Complex t = a[k] * r[n - k];
      s1 += t * static_cast<long>(k);
      s2 += t * static_cast<long>(n - k);
    }
    r[n] = (w * s1 - s2) / static_cast<long>(n);
  }
  return r;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (!near(inner[0], 0)) throw DomainError("compose: inner series must vanish at 0");
  const int n_max = common_order(outer, inner);
  TruncatedSeries in = inner.truncated(n_max);
  in[0] = zero_complex();
  TruncatedSeries r = TruncatedSeries::constant(outer[n_max], n_max);
  for (int k = n_max - 1; k >= 0; --k) {
    r = mul(r, in);
    r[0] += outer[k];
  }
  return r;
}

TruncatedSeries derive(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries::zero(0);
  TruncatedSeries r = TruncatedSeries::zero(a.order() - 1);
  for (int n = 1; n <= a.order(); ++n) r[n - 1] = a[n] * static_cast<long>(n);
  return r;
}

TruncatedSeries integrate_div_t(const TruncatedSeries& a) {
  if (!near(a[0], 0)) throw DomainError("integrate_div_t: constant term must be 0");
  TruncatedSeries r = TruncatedSeries::zero(a.order());
  for (int n = 1; n <= a.order(); ++n) r[n] = a[n] / static_cast<long>(n);
  return r;
}

TruncatedSeries shift_up(const TruncatedSeries& a) {
  TruncatedSeries r = TruncatedSeries::zero(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) r[n + 1] = a[n];
  return r;
}

TruncatedSeries shift_down(const TruncatedSeries& a) {
  if (!near(a[0], 0)) throw DomainError("shift_down: constant term must be 0");
  if (a.order() == 0) throw DomainError("shift_down: order-0 series has no known tail");
  TruncatedSeries r = TruncatedSeries::zero(a.order() - 1);
  for (int n = 1; n <= a.order(); ++n) r[n - 1] = a[n];
  return r;
}

Real max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  Real m;
  for (int n = 0; n <= common_order(a, b); ++n) m = max(m, abs(a[n] - b[n]));
  return m;
}

Complex evaluate(const TruncatedSeries& a, const Complex& z) {
  Complex r = a[a.order()];
  for (int k = a.order() - 1; k >= 0; --k) r = r * z + a[k];
  return r;
}

}  // namespace logcoef
