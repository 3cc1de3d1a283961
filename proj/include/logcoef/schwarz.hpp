#pragma once

#include "logcoef/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace logcoef {

enum class SchwarzKind { monomial, mobius_blaschke, scaled_polynomial };

/// Analytic self-map of the disk fixing 0, kept both as a closed form and
/// as its Taylor series. Construction checks |omega| on 720 boundary
/// points against 1 + 2^-(bits-16) and throws DomainError on violation.
class SchwarzSample {
public:
  /// z^k.
  static SchwarzSample monomial(int k, int order);
  /// rotation * z * prod_j (z - a_j) / (1 - conj(a_j) z); |rotation| = 1, |a_j| < 1.
  static SchwarzSample blaschke(const Complex& rotation, std::vector<Complex> poles, int order);
  /// z p(z) / (1.01 max_{|z|=1} |p|), the max estimated from 2048 boundary samples.
  static SchwarzSample scaled_polynomial(std::vector<Complex> p, int order);
  /// z p(z) taken as given; the boundary check rejects it if |z p| > 1.
  static SchwarzSample polynomial(std::vector<Complex> p, int order);

  SchwarzKind kind() const { return kind_; }
  const TruncatedSeries& series() const { return series_; }
  /// Schwarz coefficient c_n (n >= 1).
  const Complex& coeff(int n) const { return series_[n]; }

  /// Closed-form value at z.
  Complex evaluate(const Complex& z) const;
  /// max |omega| over `samples` equispaced boundary points.
  Real boundary_max(int samples = 720) const;

  /// Human-readable parameters, precise enough to rebuild the sample.
  std::string describe() const;

private:
  SchwarzSample() = default;
  void check_boundary() const;

  SchwarzKind kind_ = SchwarzKind::monomial;
  int power_ = 1;
  Complex rotation_;
  std::vector<Complex> params_;  // poles, or polynomial coefficients
  Real scale_;
  TruncatedSeries series_;
};

/// Sampling families for sample_schwarz.
enum class SampleKind { monomial, mobius_blaschke, scaled_polynomial, mixed };

/// Deterministic for a fixed seed. `monomial_power` is only read for
/// SampleKind::monomial. `mixed` draws Blaschke products (70%), scaled
/// polynomials (25%) and z, z^2, z^3 (5%).
SchwarzSample sample_schwarz(std::uint64_t seed, SampleKind kind, int order, int monomial_power = 1);

/// Decorrelated per-index seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace logcoef
