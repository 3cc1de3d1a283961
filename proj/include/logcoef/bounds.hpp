#pragma once

#include "logcoef/class_spec.hpp"
#include "logcoef/gamma.hpp"
#include "logcoef/regions.hpp"
#include "logcoef/weights.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logcoef {

/// Sharp bound on |gamma_k| for one class, with the case that produced it.
struct BoundReport {
  int gamma_index = 0;
  Real value;
  std::string branch;
  std::optional<Region> region;
  std::string extremal;
};

using GammaBounds = std::array<BoundReport, 3>;

/// Bounds on |gamma_1|, |gamma_2|, |gamma_3| over C(A, B). gamma_3 is
/// dispatched on the region of (mu, nu); a region other than D1, D2, D6,
/// D8, D9 raises CoverageError.
GammaBounds janowski_gamma_bounds(const Real& a, const Real& b);

/// gamma_3 bound that holds in every region: (A - B)/24 * ps_bound(mu, nu).
/// Used when janowski_gamma_bounds reports a coverage gap.
BoundReport janowski_gamma3_general(const Real& a, const Real& b);

/// Bounds over the Robertson class. Prefactor::printed doubles gamma_2 and
/// gamma_3, reproducing the originally published values.
GammaBounds robertson_gamma_bounds(const Real& alpha, Prefactor prefactor = Prefactor::derived);

/// Whatever gamma bounds are known for the class: none for F(c), the
/// general gamma_3 fallback for Janowski points outside the covered regions.
std::optional<GammaBounds> known_gamma_bounds(const ClassSpec& spec);

/// 1/4 sum_{n<=N} (w_n / n^2) |psi_n|^2 with psi from the class recurrence.
Real series_rhs(const ClassSpec& spec, const WeightSpec& weight, int n);
/// Same with a precomputed psi (order >= n).
Real series_rhs(const TruncatedSeries& psi, const WeightSpec& weight, int n);

/// |B|/4, 5B^2/48, |B|^3/16: bounds claimed for C(0, B), -0.99 <= B < 0.
std::array<Real, 3> cho_claimed_bounds(const Real& b);

/// The claimed bounds against gamma_k of g1, g2, g3 in C(0, B).
struct ChoRefutation {
  Real b;
  std::array<Real, 3> claimed;
  std::array<Real, 3> attained;  // |gamma_k(g_k)| from the series pipeline
  std::array<bool, 3> violated;
  bool any() const { return violated[0] || violated[1] || violated[2]; }
};
ChoRefutation refute_cho(const Real& b);

enum class Exec { serial, parallel };

/// Region histogram of (mu(A, B), nu(A, B)) over a side x side grid of
/// [-1, 1]^2 restricted to B < A.
struct CoverageReport {
  int side = 0;
  long points = 0;
  std::map<Region, long> counts;
  /// First few grid points outside D1, D2, D6, D8, D9 (A, B as doubles).
  std::vector<std::array<double, 2>> uncovered_examples;
  long uncovered = 0;
};
CoverageReport coverage_scan(int side, Exec exec = Exec::parallel);

}  // namespace logcoef
