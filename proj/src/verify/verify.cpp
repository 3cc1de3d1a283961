#include "logcoef/verify.hpp"

#include "logcoef/error.hpp"
#include "logcoef/gamma.hpp"
#include "logcoef/optimize.hpp"

#include <omp.h>

namespace logcoef {

namespace {

template <class F>
void for_each_index(long n, Exec exec, F&& body) {
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  const long bits = working_bits();
#pragma omp parallel
  {
    PrecisionGuard guard(PrecisionContext{bits});
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) body(i);
  }
}

// Cumulative 1/4 sum_{k<=n} (w_k/k^2) |psi_k|^2 for n = 0..order.
std::vector<Real> rhs_prefix(const TruncatedSeries& psi, const WeightSpec& weight, int order) {
  std::vector<Real> r(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k)
    r[static_cast<std::size_t>(k)] =
        r[static_cast<std::size_t>(k - 1)] + weight.w(k) / static_cast<long>(k) / static_cast<long>(k) * norm(psi[k]) / 4L;
  return r;
}

std::optional<Gamma123> closed_gammas(const ClassSpec& spec, const SchwarzSample& omega) {
  const Complex& c1 = omega.coeff(1);
  const Complex& c2 = omega.coeff(2);
  const Complex& c3 = omega.coeff(3);
  if (spec.is_janowski()) return gamma123_janowski(c1, c2, c3, spec.janowski_params().a, spec.janowski_params().b);
  if (spec.is_robertson()) return gamma123_robertson(c1, c2, c3, spec.robertson_params().alpha);
  return std::nullopt;
}

// omega(z) = z (c - s z) / (1 - s c z)
SchwarzSample family_omega(double c, int s, int order) {
  return SchwarzSample::blaschke(Complex(Real(static_cast<long>(-s))), {Complex(Real(c) * static_cast<long>(s))}, order);
}

template <class Objective>
SharpnessResult search(Objective&& value_of, long budget) {
  if (budget < 20) throw DomainError("sharpness search needs a budget of at least 20 evaluations");
  SharpnessResult best;
  bool have = false;
  long evals = 0;
  for (int k = 1; k <= 3; ++k) {
    Real v = value_of(SchwarzSample::monomial(k, 3));
    ++evals;
    if (!have || v > best.best) {
      best.best = v;
      best.omega = "z^" + std::to_string(k);
      best.c = 0.0;
      best.s = 0;
      have = true;
    }
  }
  const double c_max = 1.0 - 1e-9;
  const long per_sign = (budget - evals) / 2;
  for (int s : {-1, 1}) {
    auto f = [&](double c) { return value_of(family_omega(c, s, 3)); };
    ScalarMax m = grid_golden_max(f, 0.0, c_max, per_sign);
    evals += m.evaluations;
    if (m.value > best.best) {
      best.best = m.value;
      best.c = m.x;
      best.s = s;
      best.omega = family_omega(m.x, s, 3).describe();
    }
  }
  best.evaluations = evals;
  return best;
}

Complex ps_functional(const SchwarzSample& w, const Real& mu, const Real& nu) {
  const Complex& c1 = w.coeff(1);
  return w.coeff(3) + c1 * w.coeff(2) * mu + c1 * c1 * c1 * nu;
}

}  // namespace

Real verify_tolerance() { return exp2i(-(working_bits() - 20)); }

IneqReport check_weighted_ineq(const ClassMember& f, const TruncatedSeries& psi, const WeightSpec& weight, int n) {
  if (n < 0) throw DomainError("truncation order must be non-negative");
  GammaVector g = log_coeffs(f, n);
  IneqReport r{weight, n, Real(), Real(), Real(), false, weight.ratio_non_increasing(n),
               weight.in_scope() && !f.spec().exploratory()};
  for (int k = 1; k <= n; ++k) r.lhs += weight.w(k) * norm(g(k));
  r.rhs = series_rhs(psi, weight, n);
  r.margin = r.rhs - r.lhs;
  r.pass = r.margin >= -verify_tolerance();
  return r;
}

IneqReport check_weighted_ineq(const ClassMember& f, const ClassSpec& spec, const WeightSpec& weight, int n) {
  if (!(f.spec() == spec))
    throw DomainError("member was built for " + f.spec().label() + ", not " + spec.label());
  return check_weighted_ineq(f, psi_series_recurrence(spec, n), weight, n);
}

std::vector<SchwarzSample> sample_batch(std::uint64_t seed, long count, int order, Exec exec) {
  if (count < 1) throw DomainError("need at least one sample");
  std::vector<std::optional<SchwarzSample>> tmp(static_cast<std::size_t>(count));
  for_each_index(count, exec, [&](long i) {
    tmp[static_cast<std::size_t>(i)] = sample_schwarz(derive_seed(seed, static_cast<std::uint64_t>(i)), SampleKind::mixed, order);
  });
  std::vector<SchwarzSample> out;
  out.reserve(tmp.size());
  for (auto& s : tmp) out.push_back(std::move(*s));
  return out;
}

MonteCarloReport monte_carlo_class(const ClassSpec& spec, const std::vector<SchwarzSample>& omegas,
                                   std::uint64_t seed, int order, const std::vector<WeightSpec>& weights,
                                   Exec exec) {
  if (omegas.empty()) throw DomainError("need at least one sample");
  if (order < 1) throw DomainError("truncation order must be at least 1");
  const int member_order = std::max(order + 1, 4);
  for (const auto& w : omegas)
    if (w.series().order() < member_order - 1)
      throw DomainError("Schwarz samples of order " + std::to_string(w.series().order()) + " are too short for order " +
                        std::to_string(order));

  MonteCarloReport rep;
  rep.spec = spec.label();
  rep.samples = static_cast<long>(omegas.size());
  rep.seed = seed;
  rep.order = order;
  rep.bounds = known_gamma_bounds(spec);
  rep.weights = weights;

  const TruncatedSeries psi = psi_series_recurrence(spec, order);
  std::vector<std::vector<Real>> rhs;
  for (const auto& w : weights) rhs.push_back(rhs_prefix(psi, w, order));

  struct Outcome {
    std::string error;
    std::array<Real, 3> g;
    std::optional<Real> dev;
    std::vector<Real> min_margin;
    std::vector<int> worst_n;
  };
  std::vector<Outcome> out(omegas.size());

  for_each_index(rep.samples, exec, [&](long i) {
    Outcome& o = out[static_cast<std::size_t>(i)];
    const SchwarzSample& omega = omegas[static_cast<std::size_t>(i)];
    try {
      ClassMember f = member_from_schwarz(spec, omega, member_order);
      GammaVector g = log_coeffs(f, member_order - 1);
      for (int k = 0; k < 3; ++k) o.g[static_cast<std::size_t>(k)] = abs(g(k + 1));
      if (auto closed = closed_gammas(spec, omega)) {
        o.dev = max(max(abs(closed->g1 - g(1)), abs(closed->g2 - g(2))), abs(closed->g3 - g(3)));
      }
      for (std::size_t wi = 0; wi < weights.size(); ++wi) {
        Real lhs;
        Real worst;
        int worst_n = 0;
        for (int n = 1; n <= order; ++n) {
          lhs += weights[wi].w(n) * norm(g(n));
          Real m = rhs[wi][static_cast<std::size_t>(n)] - lhs;
          if (n == 1 || m < worst) {
            worst = m;
            worst_n = n;
          }
        }
        o.min_margin.push_back(worst);
        o.worst_n.push_back(worst_n);
      }
    } catch (const Error& e) {
      o.error = e.what();
    }
  });

  const Real tol = verify_tolerance();
  rep.min_margin.assign(weights.size(), Real());
  std::vector<bool> margin_set(weights.size(), false);
  for (long i = 0; i < rep.samples; ++i) {
    const Outcome& o = out[static_cast<std::size_t>(i)];
    const std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    const std::string omega = omegas[static_cast<std::size_t>(i)].describe();
    if (!o.error.empty()) {
      rep.errors.push_back("sample " + std::to_string(i) + " (" + omega + "): " + o.error);
      continue;
    }
    for (std::size_t k = 0; k < 3; ++k) {
      if (rep.argmax[k] < 0 || o.g[k] > rep.max_gamma[k]) {
        rep.max_gamma[k] = o.g[k];
        rep.argmax[k] = i;
      }
      if (rep.bounds && o.g[k] > (*rep.bounds)[k].value + tol)
        rep.findings.push_back({"gamma_bound_violation",
                                "|gamma_" + std::to_string(k + 1) + "| = " + o.g[k].str() + " exceeds bound " +
                                    (*rep.bounds)[k].value.str(),
                                sample_seed, i, omega});
    }
    if (o.dev && (!rep.max_formula_deviation || *o.dev > *rep.max_formula_deviation)) rep.max_formula_deviation = o.dev;
    for (std::size_t wi = 0; wi < weights.size(); ++wi) {
      rep.inequality_checks += order;
      if (!margin_set[wi] || o.min_margin[wi] < rep.min_margin[wi]) {
        rep.min_margin[wi] = o.min_margin[wi];
        margin_set[wi] = true;
      }
      if (o.min_margin[wi] < -tol) {
        bool in_scope = weights[wi].in_scope() && !spec.exploratory() && weights[wi].ratio_non_increasing(order);
        rep.findings.push_back({in_scope ? "inequality_violation" : "exploratory_inequality_excess",
                                "weight " + weights[wi].label() + ", N = " + std::to_string(o.worst_n[wi]) +
                                    ": margin " + o.min_margin[wi].str(),
                                sample_seed, i, omega});
      }
    }
  }
  return rep;
}

MonteCarloReport monte_carlo_class(const ClassSpec& spec, long samples, std::uint64_t seed, int order,
                                   const std::vector<WeightSpec>& weights, Exec exec) {
  const int omega_order = std::max(order + 1, 4) - 1;
  return monte_carlo_class(spec, sample_batch(seed, samples, omega_order, exec), seed, order, weights, exec);
}

SharpnessResult sharpness_search_gamma(const ClassSpec& spec, int gamma_index, long budget) {
  if (gamma_index < 1 || gamma_index > 3) throw DomainError("gamma index must be 1, 2 or 3");
  SharpnessResult r = search(
      [&](const SchwarzSample& w) { return abs(log_coeffs(member_from_schwarz(spec, w, 4), 3)(gamma_index)); }, budget);
  if (auto b = known_gamma_bounds(spec)) r.bound = (*b)[static_cast<std::size_t>(gamma_index - 1)];
  return r;
}

SharpnessResult sharpness_search_functional(const Real& mu, const Real& nu, long budget) {
  SharpnessResult r = search([&](const SchwarzSample& w) { return abs(ps_functional(w, mu, nu)); }, budget);
  Region region = ps_classify(mu, nu);
  r.bound = BoundReport{3, ps_bound_in(region, mu, nu), std::string(region_name(region)), region, ""};
  return r;
}

FunctionalReport ps_functional_check(const Real& mu, const Real& nu, const std::vector<SchwarzSample>& omegas) {
  FunctionalReport r;
  r.functional = "|c3 + mu c1 c2 + nu c1^3|, mu=" + mu.str(20) + ", nu=" + nu.str(20);
  Region region = ps_classify(mu, nu);
  r.region = region;
  r.bound = ps_bound_in(region, mu, nu);
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    Real v = abs(ps_functional(omegas[i], mu, nu));
    if (r.argmax < 0 || v > r.empirical_max) {
      r.empirical_max = v;
      r.argmax = static_cast<long>(i);
    }
  }
  if (r.argmax >= 0) r.argmax_omega = omegas[static_cast<std::size_t>(r.argmax)].describe();
  std::optional<SchwarzSample> ext;
  switch (region) {
    case Region::D1:
    case Region::D2:
    case Region::SpecialPoint21: ext = SchwarzSample::monomial(3, 3); break;
    case Region::D3:
    case Region::D4:
    case Region::D5:
    case Region::D6:
    case Region::D7: ext = SchwarzSample::monomial(1, 3); break;
    case Region::D8:
    case Region::D9: {
      Real c = g4_parameter(mu, nu);
      long s = mu.sign() >= 0 ? 1 : -1;
      ext = SchwarzSample::blaschke(Complex(Real(-s)), {Complex(c * s)}, 3);
      break;
    }
    default: break;
  }
  if (ext) {
    r.extremal = ext->describe();
    r.extremal_value = abs(ps_functional(*ext, mu, nu));
  } else {
    r.extremal = "none implemented";
  }
  r.violated = r.empirical_max > r.bound + verify_tolerance();
  return r;
}

FunctionalReport lambda_functional_check(const Complex& lambda, const std::vector<SchwarzSample>& omegas) {
  FunctionalReport r;
  r.functional = "|c2 + lambda c1^2|, lambda=" + to_string(lambda, 20);
  r.bound = max(Real(1), abs(lambda));
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const Complex& c1 = omegas[i].coeff(1);
    Real v = abs(omegas[i].coeff(2) + lambda * c1 * c1);
    if (r.argmax < 0 || v > r.empirical_max) {
      r.empirical_max = v;
      r.argmax = static_cast<long>(i);
    }
  }
  if (r.argmax >= 0) r.argmax_omega = omegas[static_cast<std::size_t>(r.argmax)].describe();
  SchwarzSample ext = SchwarzSample::monomial(abs(lambda) <= Real(1) ? 2 : 1, 2);
  const Complex& c1 = ext.coeff(1);
  r.extremal = ext.describe();
  r.extremal_value = abs(ext.coeff(2) + lambda * c1 * c1);
  r.violated = r.empirical_max > r.bound + verify_tolerance();
  return r;
}

}  // namespace logcoef
