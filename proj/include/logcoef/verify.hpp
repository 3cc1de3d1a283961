#pragma once

#include "logcoef/bounds.hpp"
#include "logcoef/classes.hpp"
#include "logcoef/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logcoef {

/// 2^-(bits-20), the slack every inequality verdict allows.
Real verify_tolerance();

/// sum_{n<=N} w_n |gamma_n(f)|^2  <=  1/4 sum_{n<=N} (w_n/n^2) |psi_n|^2.
struct IneqReport {
  WeightSpec weight;
  int n = 0;
  Real lhs;
  Real rhs;
  Real margin;  // rhs - lhs
  bool pass = false;
  bool weight_monotone = true;  // w_n/n^2 non-increasing on 1..n
  bool in_scope = true;         // weight and class both inside the stated results
};

/// f must have been built for `spec` (DomainError otherwise) and carry
/// order >= n + 1.
IneqReport check_weighted_ineq(const ClassMember& f, const ClassSpec& spec, const WeightSpec& weight, int n);
/// Same with the class psi supplied (order >= n).
IneqReport check_weighted_ineq(const ClassMember& f, const TruncatedSeries& psi, const WeightSpec& weight, int n);

/// A verified violation, with what is needed to rebuild the input.
struct Finding {
  std::string kind;
  std::string detail;
  std::uint64_t seed = 0;  // sample seed, derive_seed(run seed, index)
  long index = -1;
  std::string omega;
};

/// `count` Schwarz functions of the mixed family, sample i drawn from
/// derive_seed(seed, i).
std::vector<SchwarzSample> sample_batch(std::uint64_t seed, long count, int order, Exec exec = Exec::parallel);

struct MonteCarloReport {
  std::string spec;
  long samples = 0;
  std::uint64_t seed = 0;
  int order = 0;
  std::optional<GammaBounds> bounds;
  std::array<Real, 3> max_gamma;
  std::array<long, 3> argmax{-1, -1, -1};
  /// Largest gap between the closed gamma_1..3 formulas in Schwarz
  /// coefficients and the series pipeline (Janowski and Robertson only).
  std::optional<Real> max_formula_deviation;
  std::vector<WeightSpec> weights;
  /// Per weight, min over samples and truncation orders 1..order of rhs - lhs.
  std::vector<Real> min_margin;
  long inequality_checks = 0;
  std::vector<Finding> findings;
  std::vector<std::string> errors;  // members that could not be built
};

/// Members f = member_from_schwarz(spec, omega_i). Checks |gamma_k| against
/// known_gamma_bounds and every partial-sum inequality for N = 1..order.
/// Results do not depend on `exec`.
MonteCarloReport monte_carlo_class(const ClassSpec& spec, const std::vector<SchwarzSample>& omegas,
                                   std::uint64_t seed, int order, const std::vector<WeightSpec>& weights,
                                   Exec exec = Exec::parallel);
MonteCarloReport monte_carlo_class(const ClassSpec& spec, long samples, std::uint64_t seed, int order,
                                   const std::vector<WeightSpec>& weights, Exec exec = Exec::parallel);

struct SharpnessResult {
  Real best;
  std::string omega;  // maximizing Schwarz function
  double c = 0.0;     // family parameter, when the maximizer is in the family
  int s = 0;          // +-1 in the family, 0 for a monomial
  long evaluations = 0;
  std::optional<BoundReport> bound;
};

/// Maximizes |gamma_k| over z, z^2, z^3 and omega(z) = z(c - s z)/(1 - s c z),
/// s = +-1, c in [0, 1), by grid + golden-section search.
SharpnessResult sharpness_search_gamma(const ClassSpec& spec, int gamma_index, long budget);

/// Same search for |c3 + mu c1 c2 + nu c1^3|.
SharpnessResult sharpness_search_functional(const Real& mu, const Real& nu, long budget);

struct FunctionalReport {
  std::string functional;
  Real bound;
  std::optional<Region> region;
  Real empirical_max;
  long argmax = -1;
  std::string argmax_omega;
  Real extremal_value;
  std::string extremal;
  bool violated = false;
};

/// |c3 + mu c1 c2 + nu c1^3| over the sampled omegas against ps_bound, and
/// at the region's extremal Schwarz function.
FunctionalReport ps_functional_check(const Real& mu, const Real& nu, const std::vector<SchwarzSample>& omegas);
/// |c2 + lambda c1^2| against max(1, |lambda|).
FunctionalReport lambda_functional_check(const Complex& lambda, const std::vector<SchwarzSample>& omegas);

}  // namespace logcoef
