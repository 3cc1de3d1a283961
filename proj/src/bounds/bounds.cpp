#include "logcoef/bounds.hpp"

#include "logcoef/classes.hpp"
#include "logcoef/error.hpp"

#include <omp.h>

namespace logcoef {

namespace {

void check_janowski(const Real& a, const Real& b) {
  if (!(b >= Real(-1)) || !(b < a) || !(a <= Real(1))) throw DomainError("Janowski bounds need -1 <= B < A <= 1");
}

std::string pair_label(const Real& a, const Real& b) { return "(A,B)=(" + a.str(17) + ", " + b.str(17) + ")"; }

}  // namespace

GammaBounds janowski_gamma_bounds(const Real& a, const Real& b) {
  check_janowski(a, b);
  const Real amb = a - b;
  const Real a5b = abs(a - Real(5) * b);
  auto [mu, nu] = janowski_mu_nu(a, b);

  GammaBounds r;
  r[0] = {1, amb / 4L, "all (A,B)", std::nullopt, "g1: omega=z"};
  if (a5b <= Real(4))
    r[1] = {2, amb / 12L, "|A-5B| <= 4", std::nullopt, "g2: omega=z^2"};
  else
    r[1] = {2, amb * a5b / 48L, "|A-5B| > 4", std::nullopt, "g1: omega=z"};

  Region region = ps_classify(mu, nu);
  switch (region) {
    case Region::D1:
    case Region::D2:
    case Region::SpecialPoint21:
      r[2] = {3, amb / 24L, "(mu,nu) in D1 u D2", region, "g3: omega=z^3"};
      break;
    case Region::D6:
      r[2] = {3, amb * abs(b * (a - Real(3) * b)) / 48L, "(mu,nu) in D6", region, "g1: omega=z"};
      break;
    case Region::D8:
    case Region::D9: {
      Real x = a5b + Real(2);
      Real y = x + Real(3) * b * b - a * b;
      Real value = amb / (Real(72) * sqrt(Real(3))) * x * sqrt(x) / sqrt(y);
      Real c = g4_parameter(mu, nu);
      long s = mu.sign() >= 0 ? 1 : -1;
      r[2] = {3, value, "(mu,nu) in D8 u D9", region,
              "g4: omega=z(c-sz)/(1-scz), c=" + c.str(20) + ", s=" + std::to_string(s)};
      break;
    }
    default:
      throw CoverageError(pair_label(a, b) + " gives (mu,nu)=(" + mu.str(20) + ", " + nu.str(20) + ") in " +
                          std::string(region_name(region)) + ", outside D1, D2, D6, D8, D9");
  }
  return r;
}

BoundReport janowski_gamma3_general(const Real& a, const Real& b) {
  check_janowski(a, b);
  auto [mu, nu] = janowski_mu_nu(a, b);
  Region region = ps_classify(mu, nu);
  return {3, (a - b) / 24L * ps_bound_in(region, mu, nu), "(A-B)/24 * max|c3 + mu c1 c2 + nu c1^3|", region,
          "none established"};
}

GammaBounds robertson_gamma_bounds(const Real& alpha, Prefactor prefactor) {
  ClassSpec::robertson(alpha);  // validates alpha
  const Real ca = cos(alpha);
  const Real c2 = ca * ca;
  const long k = prefactor == Prefactor::derived ? 1 : 2;
  const std::string tag = prefactor == Prefactor::derived ? "derived prefactor (1+A)/48" : "printed prefactor (1+A)/24";
  GammaBounds r;
  r[0] = {1, ca / 2L, "all alpha", std::nullopt, "h2: omega=z"};
  r[1] = {2, ca * k / 12L * sqrt(Real(4) + Real(5) * c2), tag, std::nullopt, "h2: omega=z"};
  // The printed gamma_3 bound is four times the derived one: besides the
  // doubled prefactor, its square root carries a second factor 2.
  r[2] = {3, ca * (k * k) / 12L * sqrt(Real(1) + Real(3) * c2), tag, std::nullopt, "h2: omega=z"};
  return r;
}

std::optional<GammaBounds> known_gamma_bounds(const ClassSpec& spec) {
  if (spec.is_robertson()) return robertson_gamma_bounds(spec.robertson_params().alpha);
  if (spec.is_janowski()) {
    const auto& p = spec.janowski_params();
    try {
      return janowski_gamma_bounds(p.a, p.b);
    } catch (const CoverageError&) {
      // gamma_1 and gamma_2 do not depend on the region
      GammaBounds r;
      Real amb = p.a - p.b;
      Real a5b = abs(p.a - Real(5) * p.b);
      r[0] = {1, amb / 4L, "all (A,B)", std::nullopt, "g1: omega=z"};
      r[1] = a5b <= Real(4) ? BoundReport{2, amb / 12L, "|A-5B| <= 4", std::nullopt, "g2: omega=z^2"}
                            : BoundReport{2, amb * a5b / 48L, "|A-5B| > 4", std::nullopt, "g1: omega=z"};
      r[2] = janowski_gamma3_general(p.a, p.b);
      return r;
    }
  }
  return std::nullopt;
}

Real series_rhs(const TruncatedSeries& psi, const WeightSpec& weight, int n) {
  if (n < 0) throw DomainError("series_rhs: negative truncation order");
  if (psi.order() < n) throw DomainError("series_rhs: psi known only through order " + std::to_string(psi.order()));
  Real sum;
  for (int k = 1; k <= n; ++k) sum += weight.w(k) / static_cast<long>(k) / static_cast<long>(k) * norm(psi[k]);
  return sum / 4L;
}

Real series_rhs(const ClassSpec& spec, const WeightSpec& weight, int n) {
  return series_rhs(psi_series_recurrence(spec, std::max(n, 0)), weight, n);
}

std::array<Real, 3> cho_claimed_bounds(const Real& b) {
  if (!(b >= Real::parse("-0.99")) || !(b < Real(0)))
    throw DomainError("the claimed bounds are stated for -0.99 <= B < 0, got " + b.str(17));
  Real ab = abs(b);
  return {ab / 4L, Real(5) * ab * ab / 48L, ab * ab * ab / 16L};
}

ChoRefutation refute_cho(const Real& b) {
  ChoRefutation r;
  r.b = b;
  r.claimed = cho_claimed_bounds(b);
  ClassSpec spec = ClassSpec::janowski(Real(0), b);
  const Real tol = exp2i(-(working_bits() - 20));
  const char* names[] = {"g1", "g2", "g3"};
  for (int k = 0; k < 3; ++k) {
    GammaVector g = log_coeffs(named_extremal(spec, names[k], 4), 3);
    r.attained[static_cast<std::size_t>(k)] = abs(g(k + 1));
    r.violated[static_cast<std::size_t>(k)] = r.attained[static_cast<std::size_t>(k)] > r.claimed[static_cast<std::size_t>(k)] + tol;
  }
  return r;
}

CoverageReport coverage_scan(int side, Exec exec) {
  if (side < 2) throw DomainError("coverage grid needs at least 2 points per side");
  const long bits = working_bits();
  const long cells = static_cast<long>(side) * side;
  std::vector<signed char> region(static_cast<std::size_t>(cells), -1);  // -1: not a valid (A, B)

  auto classify = [&](long idx) {
    const long i = idx / side, j = idx % side;
    Real a = Real(-1) + Real(2) * i / static_cast<long>(side - 1);
    Real b = Real(-1) + Real(2) * j / static_cast<long>(side - 1);
    if (!(b < a)) return;
    auto [mu, nu] = janowski_mu_nu(a, b);
    region[static_cast<std::size_t>(idx)] = static_cast<signed char>(ps_classify(mu, nu));
  };

  if (exec == Exec::serial) {
    for (long idx = 0; idx < cells; ++idx) classify(idx);
  } else {
#pragma omp parallel
    {
      PrecisionGuard guard(PrecisionContext{bits});
#pragma omp for schedule(dynamic, 256)
      for (long idx = 0; idx < cells; ++idx) classify(idx);
    }
  }

  CoverageReport rep;
  rep.side = side;
  for (long idx = 0; idx < cells; ++idx) {
    signed char r = region[static_cast<std::size_t>(idx)];
    if (r < 0) continue;
    ++rep.points;
    auto reg = static_cast<Region>(r);
    ++rep.counts[reg];
    bool covered = reg == Region::D1 || reg == Region::D2 || reg == Region::D6 || reg == Region::D8 ||
                   reg == Region::D9 || reg == Region::SpecialPoint21;
    if (!covered) {
      ++rep.uncovered;
      if (rep.uncovered_examples.size() < 10) {
        double a = -1.0 + 2.0 * static_cast<double>(idx / side) / (side - 1);
        double b = -1.0 + 2.0 * static_cast<double>(idx % side) / (side - 1);
        rep.uncovered_examples.push_back({a, b});
      }
    }
  }
  return rep;
}

}  // namespace logcoef
