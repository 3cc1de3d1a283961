#include "logcoef/classes.hpp"

#include "logcoef/error.hpp"
#include "logcoef/regions.hpp"

#include <variant>

namespace logcoef {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// 1 + s z
TruncatedSeries one_plus(const Complex& s, int order) {
  TruncatedSeries r = TruncatedSeries::one(order);
  if (order >= 1) r[1] = s;
  return r;
}

TruncatedSeries one_minus_z(int order) { return one_plus(Complex(-1L), order); }

// w z / ((1 - z)(1 - (1 - z)^w)), w != 0. Shared by F(c) (w = c - 1) and
// the Robertson class (w = e^{-2 i alpha}).
TruncatedSeries psi_power_form(const Complex& w, int order) {
  TruncatedSeries p = pow_series(one_minus_z(order + 1), w);
  TruncatedSeries h = shift_down(TruncatedSeries::one(order + 1) - p);  // h(0) = w
  return recip(mul(one_minus_z(order), h)) * w;
}

}  // namespace

std::pair<Real, Real> janowski_mu_nu(const Real& a, const Real& b) {
  return {(a - Real(5) * b) / 2L, (Real(3) * b * b - a * b) / 2L};
}

TruncatedSeries phi_series(const ClassSpec& spec, int order) {
  TruncatedSeries r = TruncatedSeries::one(order);
  std::visit(overloaded{
                 [&](const FcClass& p) {
                   for (int n = 1; n <= order; ++n) r[n] = Complex(p.c);
                 },
                 [&](const JanowskiClass& p) {
                   Complex t(p.a - p.b);
                   Complex ratio(-p.b);
                   for (int n = 1; n <= order; ++n) {
                     r[n] = t;
                     t = t * ratio;
                   }
                 },
                 [&](const RobertsonClass&) {
                   Complex b = Complex(1L) + spec.robertson_a();
                   for (int n = 1; n <= order; ++n) r[n] = b;
                 },
             },
             spec.variant());
  return r;
}

TruncatedSeries phi_of(const ClassSpec& spec, const TruncatedSeries& omega) {
  const int order = omega.order();
  TruncatedSeries one = TruncatedSeries::one(order);
  return std::visit(overloaded{
                        [&](const FcClass& p) {
                          return one + mul(omega, recip(one - omega)) * Complex(p.c);
                        },
                        [&](const JanowskiClass& p) {
                          return mul(one + omega * Complex(p.a), recip(one + omega * Complex(p.b)));
                        },
                        [&](const RobertsonClass&) {
                          return mul(one + omega * spec.robertson_a(), recip(one - omega));
                        },
                    },
                    spec.variant());
}

TruncatedSeries psi_series_recurrence(const ClassSpec& spec, int order) {
  TruncatedSeries phi = phi_series(spec, order);
  TruncatedSeries psi = TruncatedSeries::one(order);
  std::vector<Complex> diff(static_cast<std::size_t>(order) + 1);
  Real scratch;
  for (int n = 1; n <= order; ++n) {
    Complex acc = phi[n];
    for (int k = 1; k < n; ++k) acc.add_product(diff[static_cast<std::size_t>(k)], psi[n - k], scratch);
    psi[n] = acc / static_cast<long>(n + 1);
    diff[static_cast<std::size_t>(n)] = phi[n] - psi[n];
  }
  return psi;
}

TruncatedSeries psi_series_closed(const ClassSpec& spec, int order) {
  return std::visit(
      overloaded{
          [&](const FcClass& p) {
            if (p.c == Real(1)) {
              // -z / ((1 - z) log(1 - z)), with -log(1 - z) = z m(z), m(0) = 1
              TruncatedSeries m = shift_down(-log_series(one_minus_z(order + 1)));
              return recip(mul(one_minus_z(order), m));
            }
            return psi_power_form(Complex(p.c - Real(1)), order);
          },
          [&](const JanowskiClass& p) {
            Complex a(p.a), b(p.b);
            TruncatedSeries one = TruncatedSeries::one(order + 1);
            if (p.a.is_zero()) {
              // z B / ((1 + Bz) log(1 + Bz)), log(1 + Bz) = z l(z), l(0) = B
              TruncatedSeries l = shift_down(log_series(one_plus(b, order + 1)));
              return recip(mul(one_plus(b, order), l)) * b;
            }
            if (p.b.is_zero()) {
              // A z e^{Az} / (e^{Az} - 1)
              TruncatedSeries e = exp_series(TruncatedSeries::monomial(1, a, order + 1));
              TruncatedSeries d = shift_down(e - one);
              return mul(e.truncated(order), recip(d)) * a;
            }
            // A z (1 + Bz)^{A/B - 1} / ((1 + Bz)^{A/B} - 1)
            Complex w = a / b;
            TruncatedSeries d = shift_down(pow_series(one_plus(b, order + 1), w) - one);
            TruncatedSeries q = pow_series(one_plus(b, order), w - Complex(1L));
            return mul(q, recip(d)) * a;
          },
          [&](const RobertsonClass&) { return psi_power_form(spec.robertson_a(), order); },
      },
      spec.variant());
}

TruncatedSeries extremal_series(const ClassSpec& spec, int order) {
  TruncatedSeries one = TruncatedSeries::one(order);
  return std::visit(
      overloaded{
          [&](const FcClass& p) {
            if (p.c == Real(1)) return -log_series(one_minus_z(order));
            Complex cm1(p.c - Real(1));
            return (pow_series(one_minus_z(order), -cm1) - one) * (Complex(1L) / cm1);
          },
          [&](const JanowskiClass& p) {
            Complex a(p.a), b(p.b);
            if (p.a.is_zero()) return log_series(one_plus(b, order)) * (Complex(1L) / b);
            if (p.b.is_zero())
              return (exp_series(TruncatedSeries::monomial(1, a, order)) - one) * (Complex(1L) / a);
            return (pow_series(one_plus(b, order), a / b) - one) * (Complex(1L) / a);
          },
          [&](const RobertsonClass&) {
            Complex a = spec.robertson_a();
            return (pow_series(one_minus_z(order), -a) - one) * (Complex(1L) / a);
          },
      },
      spec.variant());
}

ClassMember extremal_member(const ClassSpec& spec, int order) {
  return ClassMember(spec, extremal_series(spec, order), "extremal");
}

ClassMember member_from_schwarz(const ClassSpec& spec, const SchwarzSample& omega, int order) {
  if (order < 1) throw DomainError("member order must be at least 1");
  if (omega.series().order() < order - 1)
    throw DomainError("Schwarz series order " + std::to_string(omega.series().order()) +
                      " too small for a member of order " + std::to_string(order));
  if (!omega.series()[0].is_zero()) throw DomainError("Schwarz function must vanish at 0");

  TruncatedSeries p = phi_of(spec, omega.series().truncated(order - 1));
  TruncatedSeries log_fprime = integrate_div_t(p - TruncatedSeries::one(order - 1));
  TruncatedSeries fprime = exp_series(log_fprime);
  TruncatedSeries f = TruncatedSeries::zero(order);
  for (int n = 1; n <= order; ++n) f[n] = fprime[n - 1] / static_cast<long>(n);

  // 1 + z f''/f' must reproduce phi(omega).
  TruncatedSeries z_fpp = order >= 2 ? shift_up(derive(fprime)) : TruncatedSeries::zero(0);
  TruncatedSeries back = TruncatedSeries::one(z_fpp.order()) + mul(z_fpp, recip(fprime));
  Real scale(1);
  for (const auto& c : p.coeffs()) scale = max(scale, abs(c));
  Real err = max_abs_diff(back, p);
  if (err > exp2i(-(working_bits() - 32)) * scale)
    throw Error("member_from_schwarz: subordination round-trip error " + err.str(6));

  return ClassMember(spec, std::move(f), "omega=" + omega.describe());
}

Real g4_parameter(const Real& mu, const Real& nu) {
  Real m1 = abs(mu) + Real(1);
  return sqrt(m1 / (Real(3) * (m1 + nu)));
}

SchwarzSample g4_omega(const ClassSpec& spec, int order) {
  if (!spec.is_janowski()) throw DomainError("g4 is defined for Janowski classes only");
  const auto& p = spec.janowski_params();
  auto [mu, nu] = janowski_mu_nu(p.a, p.b);
  Region r = ps_classify(mu, nu);
  if (r != Region::D8 && r != Region::D9)
    throw DomainError("g4 requires (mu, nu) in D8 or D9; " + spec.label() + " gives " + std::string(region_name(r)));
  Real c = g4_parameter(mu, nu);
  long s = mu.sign() >= 0 ? 1 : -1;
  // z (c - s z) / (1 - s c z) = (-s) z (z - s c) / (1 - s c z)
  return SchwarzSample::blaschke(Complex(Real(-s)), {Complex(c * s)}, order);
}

ClassMember named_extremal(const ClassSpec& spec, const std::string& name, int order) {
  auto omega_order = std::max(order, 1);
  if (name == "g1" || name == "g2" || name == "g3")
    return member_from_schwarz(spec, SchwarzSample::monomial(name[1] - '0', omega_order), order);
  if (name == "g4") return member_from_schwarz(spec, g4_omega(spec, omega_order), order);
  if (name == "h2") {
    if (!spec.is_robertson()) throw DomainError("h2 is defined for the Robertson class only");
    return member_from_schwarz(spec, SchwarzSample::monomial(1, omega_order), order);
  }
  throw DomainError("unknown extremal '" + name + "' (expected g1, g2, g3, g4 or h2)");
}

}  // namespace logcoef
