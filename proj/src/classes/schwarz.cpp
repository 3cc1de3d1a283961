#include "logcoef/schwarz.hpp"

#include "logcoef/error.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <utility>

namespace logcoef {

namespace {

// Equispaced points on the unit circle, cached per (precision, count).
const std::vector<Complex>& circle_points(int samples) {
  thread_local std::map<std::pair<long, int>, std::vector<Complex>> cache;
  auto key = std::make_pair(working_bits(), samples);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  Real two_pi = pi() * 2L;
  for (int k = 0; k < samples; ++k) pts.push_back(Complex::polar(Real(1), two_pi * static_cast<long>(k) / static_cast<long>(samples)));
  return cache.emplace(key, std::move(pts)).first->second;
}

// (z - a) / (1 - conj(a) z) as a series through `order`.
TruncatedSeries blaschke_factor(const Complex& a, int order) {
  TruncatedSeries s = TruncatedSeries::zero(order);
  Complex ab = conj(a);
  Complex pw(1L);  // conj(a)^k
  // coefficient n: -a * conj(a)^n + conj(a)^(n-1)
  Complex prev(0L);
  for (int n = 0; n <= order; ++n) {
    s[n] = prev - a * pw;
    prev = pw;
    pw = pw * ab;
  }
  return s;
}

std::string fmt(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", z.re.to_double(), z.im.to_double());
  return buf;
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
  int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

private:
  std::mt19937_64 eng_;
};

Complex unimodular(Rng& rng) {
  return Complex::polar(Real(1), Real(2.0 * std::numbers::pi * rng.uniform()));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over seed and index
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SchwarzSample SchwarzSample::monomial(int k, int order) {
  if (k < 1) throw DomainError("monomial Schwarz function needs k >= 1");
  SchwarzSample s;
  s.kind_ = SchwarzKind::monomial;
  s.power_ = k;
  s.rotation_ = Complex(1L);
  s.series_ = TruncatedSeries::monomial(k, Complex(1L), order);
  return s;
}

SchwarzSample SchwarzSample::blaschke(const Complex& rotation, std::vector<Complex> poles, int order) {
  Real tol = exp2i(-(working_bits() - 16));
  if (abs(abs(rotation) - Real(1)) > tol) throw DomainError("Blaschke rotation must be unimodular");
  for (const auto& a : poles)
    if (!(abs(a) < Real(1))) throw DomainError("Blaschke zeros must lie inside the unit disk");
  SchwarzSample s;
  s.kind_ = SchwarzKind::mobius_blaschke;
  s.rotation_ = rotation;
  s.params_ = std::move(poles);
  TruncatedSeries prod = TruncatedSeries::constant(rotation, std::max(order - 1, 0));
  for (const auto& a : s.params_) prod = mul(prod, blaschke_factor(a, prod.order()));
  s.series_ = order == 0 ? TruncatedSeries::zero(0) : shift_up(prod);
  s.check_boundary();
  return s;
}

SchwarzSample SchwarzSample::scaled_polynomial(std::vector<Complex> p, int order) {
  if (p.empty()) throw DomainError("scaled polynomial needs at least one coefficient");
  TruncatedSeries poly{std::vector<Complex>(p)};
  Real norm_est;
  for (const auto& z : circle_points(2048)) norm_est = max(norm_est, abs(logcoef::evaluate(poly, z)));
  if (norm_est.is_zero()) throw DomainError("scaled polynomial must not vanish identically");
  SchwarzSample s;
  s.kind_ = SchwarzKind::scaled_polynomial;
  s.params_ = std::move(p);
  s.scale_ = Real(1) / (norm_est * Real::parse("1.01"));
  s.series_ = TruncatedSeries::zero(order);
  for (int n = 1; n <= order && n - 1 < static_cast<int>(s.params_.size()); ++n)
    s.series_[n] = s.params_[static_cast<std::size_t>(n - 1)] * s.scale_;
  s.check_boundary();
  return s;
}

SchwarzSample SchwarzSample::polynomial(std::vector<Complex> p, int order) {
  if (p.empty()) throw DomainError("polynomial Schwarz function needs at least one coefficient");
  SchwarzSample s;
  s.kind_ = SchwarzKind::scaled_polynomial;
  s.params_ = std::move(p);
  s.scale_ = Real(1);
  s.series_ = TruncatedSeries::zero(order);
  for (int n = 1; n <= order && n - 1 < static_cast<int>(s.params_.size()); ++n) s.series_[n] = s.params_[static_cast<std::size_t>(n - 1)];
  s.check_boundary();
  return s;
}

Complex SchwarzSample::evaluate(const Complex& z) const {
  switch (kind_) {
    case SchwarzKind::monomial: {
      Complex r = z;
      for (int k = 1; k < power_; ++k) r = r * z;
      return r;
    }
    case SchwarzKind::mobius_blaschke: {
      Complex r = rotation_ * z;
      Complex one(1L);
      for (const auto& a : params_) r = r * ((z - a) / (one - conj(a) * z));
      return r;
    }
    case SchwarzKind::scaled_polynomial: {
      TruncatedSeries poly{std::vector<Complex>(params_)};
      return z * logcoef::evaluate(poly, z) * scale_;
    }
  }
  throw Error("unknown Schwarz kind");
}

Real SchwarzSample::boundary_max(int samples) const {
  Real m;
  for (const auto& z : circle_points(samples)) m = max(m, norm(evaluate(z)));
  return sqrt(m);
}

void SchwarzSample::check_boundary() const {
  Real limit = Real(1) + exp2i(-(working_bits() - 16));
  if (boundary_max(720) > limit) throw DomainError("Schwarz sample exceeds modulus 1 on the boundary: " + describe());
}

std::string SchwarzSample::describe() const {
  std::string out;
  switch (kind_) {
    case SchwarzKind::monomial: return "z^" + std::to_string(power_);
    case SchwarzKind::mobius_blaschke:
      out = "blaschke(rotation=" + fmt(rotation_) + ", zeros=[";
      break;
    case SchwarzKind::scaled_polynomial:
      out = "scaled_polynomial(coeffs=[";
      break;
  }
  for (std::size_t i = 0; i < params_.size(); ++i) out += (i ? ", " : "") + fmt(params_[i]);
  if (kind_ == SchwarzKind::scaled_polynomial) return out + "], scale=" + scale_.str(17) + ")";
  return out + "])";
}

SchwarzSample sample_schwarz(std::uint64_t seed, SampleKind kind, int order, int monomial_power) {
  Rng rng(derive_seed(seed, 0));
  if (kind == SampleKind::mixed) {
    double u = rng.uniform();
    if (u < 0.70) kind = SampleKind::mobius_blaschke;
    else if (u < 0.95) kind = SampleKind::scaled_polynomial;
    else {
      kind = SampleKind::monomial;
      monomial_power = 1 + rng.below(3);
    }
  }
  switch (kind) {
    case SampleKind::monomial: return SchwarzSample::monomial(monomial_power, order);
    case SampleKind::mobius_blaschke: {
      Complex rot = unimodular(rng);
      int factors = rng.below(4);
      std::vector<Complex> poles;
      for (int j = 0; j < factors; ++j) {
        double r = 0.95 * std::sqrt(rng.uniform());
        double t = 2.0 * std::numbers::pi * rng.uniform();
        poles.emplace_back(r * std::cos(t), r * std::sin(t));
      }
      return SchwarzSample::blaschke(rot, std::move(poles), order);
    }
    case SampleKind::scaled_polynomial: {
      int degree = rng.below(6);
      std::vector<Complex> p;
      for (int j = 0; j <= degree; ++j) {
        double re = rng.gaussian();
        double im = rng.gaussian();
        p.emplace_back(re, im);
      }
      return SchwarzSample::scaled_polynomial(std::move(p), order);
    }
    case SampleKind::mixed: break;
  }
  throw Error("unreachable sample kind");
}

}  // namespace logcoef
