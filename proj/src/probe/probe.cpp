#include "logcoef/probe.hpp"

#include "logcoef/classes.hpp"
#include "logcoef/error.hpp"

#include <omp.h>

namespace logcoef {

namespace {

// x at the current working precision, or higher if x already carries more.
Real lift(const Real& x) { return Real::with_bits(working_bits()) + x; }

Complex Psi(const Real& c_in, const Real& eps_in, ProbeMode mode) {
  Real c = lift(c_in);
  Real eps = lift(eps_in);
  Complex z = boundary_point(eps);
  Complex u = one_minus_boundary_point(eps);
  if (mode == ProbeMode::radial) {
    Real delta = Real::parse("1e-40");
    Real r = Real(1) - delta;
    z = z * r;
    u = u * r + Complex(delta);
  }
  Jet2 psi = psi_jet(c, z, u);
  if (psi.df.is_zero()) throw DomainError("psi' vanishes at the probe point");
  return Complex(1L) + z * psi.d2f / psi.df;
}

}  // namespace

Jet2 psi_jet(const Real& c, const Complex& z, const Complex& u) {
  Jet2 zj = Jet2::variable(z);
  Jet2 uj{u, Complex(-1L), Complex(Real::with_bits(u.bits()))};
  Complex one(1L);
  if (c == Real(1)) return -(zj / (uj * log(uj)));
  Complex w(c - Real(1));
  Jet2 den = uj * (Jet2::constant(one) - pow(uj, w));
  return (zj * w) / den;
}

bool precision_gate_passes(const Complex& lo, const Complex& hi, long bits) {
  Real scale = max(abs(lo.re), abs(lo) * exp2i(-bits / 2));
  return abs(lo.re - hi.re) < scale * Real::parse("1e-6");
}

std::pair<Complex, Complex> gated_evaluate(const std::function<Complex(long)>& at, long bits,
                                           const std::string& what) {
  Complex lo = at(bits);
  Complex hi = at(bits + 64);
  if (precision_gate_passes(lo, hi, bits)) return {lo, hi};
  long required = -1;
  Complex prev = hi;
  for (long b = bits + 64; b <= 4096; b += 64) {
    Complex next = at(b + 64);
    if (precision_gate_passes(prev, next, b)) {
      required = b;
      break;
    }
    prev = next;
  }
  throw PrecisionError(what + " is not stable at " + std::to_string(bits) + " bits" +
                           (required > 0 ? "; needs " + std::to_string(required) + " bits"
                                         : "; unstable up to 4096 bits"),
                       required);
}

Real re_Psi_unchecked(const Real& c, const Real& eps, ProbeMode mode) { return Psi(c, eps, mode).re; }

BoundaryProbe re_Psi_boundary(const Real& c, const Real& eps, PrecisionContext ctx, ProbeMode mode) {
  if (!(c > Real(0)) || !(c <= Real(3))) throw DomainError("boundary probe needs 0 < c <= 3");
  const long bits = PrecisionContext::checked(ctx.bits).bits;
  auto at = [&](long b) {
    PrecisionGuard g(PrecisionContext{b});
    return Psi(c, eps, mode);
  };
  auto [lo, hi] = gated_evaluate(at, bits, "Re Psi at c=" + c.str(17) + ", eps=" + eps.str(17));
  return BoundaryProbe{c, eps, lo.re, bits, hi.re};
}

ScanResult scan_theta(const Real& c, const std::vector<Real>& eps_grid, PrecisionContext ctx, Exec exec,
                      ProbeMode mode) {
  ScanResult res;
  res.points.resize(eps_grid.size());
  auto one = [&](std::size_t i) {
    ScanPoint& p = res.points[i];
    p.eps = eps_grid[i];
    try {
      p.probe = re_Psi_boundary(c, eps_grid[i], ctx, mode);
    } catch (const Error& e) {
      p.error = e.what();
    }
  };
  const long n = static_cast<long>(eps_grid.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
  } else {
    const long bits = working_bits();
#pragma omp parallel
    {
      PrecisionGuard guard(PrecisionContext{bits});
#pragma omp for schedule(dynamic, 1)
      for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
    }
  }
  for (std::size_t i = 0; i < res.points.size(); ++i) {
    if (!res.points[i].probe) continue;
    if (!res.argmin || res.points[i].probe->re_psi_cap < res.points[*res.argmin].probe->re_psi_cap) res.argmin = i;
  }
  return res;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"0.1", 20, -1.66e6},   {"0.15", 31, -1.02e24}, {"0.2", 28, -1.077e22}, {"0.25", 13, -375.774},
      {"0.3", 30, -9.57e31},  {"0.35", 17, -4.65e12}, {"0.4", 20, -2.05e19},  {"0.45", 19, -3.41e19},
      {"0.4", 20, -2.05e19},  {"0.5", 20, -2.18e13},
  };
  return rows;
}

namespace {
void check_hyper_params(const Real& cc) {
  if (cc.sign() <= 0 && mpfr_integer_p(cc.get())) throw DomainError("hypergeometric parameter cc is a non-positive integer");
}
}  // namespace

HyperSum hyper_f(const Real& a, const Real& b, const Real& cc, const Complex& z, int terms) {
  check_hyper_params(cc);
  if (!(abs(z) < Real(1))) throw DomainError("hypergeometric series needs |z| < 1");
  if (terms < 1) throw DomainError("hypergeometric series needs at least one term");
  Complex term(1L);
  Complex sum(Real::with_bits(working_bits()));
  for (int n = 0; n < terms; ++n) {
    sum += term;
    if (n + 1 == terms) break;
    Real k(static_cast<long>(n));
    term = term * z * ((a + k) * (b + k) / ((cc + k) * static_cast<long>(n + 1)));
  }
  return {sum, abs(term)};
}

TruncatedSeries hyper_series(const Real& a, const Real& b, const Real& cc, int order) {
  check_hyper_params(cc);
  TruncatedSeries s = TruncatedSeries::one(order);
  Real t(1);
  for (int n = 0; n < order; ++n) {
    Real k(static_cast<long>(n));
    t = t * (a + k) * (b + k) / ((cc + k) * static_cast<long>(n + 1));
    s[n + 1] = Complex(t);
  }
  return s;
}

Real hyper_ratio_identity_check(const Real& c, int order) {
  if (c == Real(1)) throw DomainError("the hypergeometric ratio identity is used for c != 1");
  ClassSpec spec = ClassSpec::fc(c);
  Real one(1), two(2);
  TruncatedSeries num = hyper_series(c + one, one, two, order);
  TruncatedSeries den = hyper_series(c, one, two, order);
  TruncatedSeries lhs = mul(num, recip(den)) * Complex(c) + TruncatedSeries::constant(Complex(one - c), order);
  return max_abs_diff(lhs, psi_series_recurrence(spec, order));
}

bool sugawa_predicate(const Real& a, const Real& b, const Real& cc) {
  Real s = a + b;
  return s - Real(1) < cc && cc < s + Real(1) / 2L && (cc - a) * (cc - b) > Real(0);
}

}  // namespace logcoef
