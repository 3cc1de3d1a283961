#pragma once

#include "logcoef/arith/jet.hpp"
#include "logcoef/bounds.hpp"
#include "logcoef/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace logcoef {

/// Re Psi, Psi = 1 + z psi''/psi', for the F(c) best dominant at
/// z = e^{i theta}, theta = (2 - eps) pi.
struct BoundaryProbe {
  Real c;
  Real eps;
  Real re_psi_cap;
  long bits_used = 0;
  /// Value recomputed at bits_used + 64, kept for the stability report.
  Real re_psi_cap_check;
};

enum class ProbeMode {
  on_circle,  ///< principal-branch continuation of the closed form at |z| = 1
  radial,     ///< z = r e^{i theta} with r = 1 - 10^-40
};

/// psi(z) and its first two derivatives from the closed form
/// (c-1) z / ((1 - z)(1 - (1 - z)^{c-1})), or -z / ((1 - z) log(1 - z))
/// for c = 1. `u` is 1 - z, passed separately so that callers can form it
/// without cancellation.
Jet2 psi_jet(const Real& c, const Complex& z, const Complex& u);

/// The stability gate on two evaluations made at `bits` and bits + 64: their
/// real parts agree within 1 ppm of max(|Re lo|, |lo| 2^(-bits/2)).
bool precision_gate_passes(const Complex& lo, const Complex& hi, long bits);

/// Runs `at(bits)` and `at(bits + 64)`. If the gate fails, raises
/// PrecisionError naming the smallest precision, in 64-bit steps up to
/// 4096, at which it would pass (-1 if none). Returns both values.
std::pair<Complex, Complex> gated_evaluate(const std::function<Complex(long)>& at, long bits,
                                           const std::string& what);

/// Re(1 + z psi''/psi') without the stability gate.
Real re_Psi_unchecked(const Real& c, const Real& eps, ProbeMode mode = ProbeMode::on_circle);

/// Evaluates at ctx.bits and ctx.bits + 64. If the two differ by 1 ppm or
/// more (relative to max(|Re Psi|, |Psi| 2^(-bits/2))), raises
/// PrecisionError naming the smallest precision, in 64-bit steps up to
/// 4096, at which the gate would pass. DomainError when psi' vanishes.
BoundaryProbe re_Psi_boundary(const Real& c, const Real& eps, PrecisionContext ctx,
                              ProbeMode mode = ProbeMode::on_circle);

struct ScanPoint {
  Real eps;
  std::optional<BoundaryProbe> probe;
  std::string error;  // set when probe is empty
};

struct ScanResult {
  std::vector<ScanPoint> points;
  /// Index of the smallest Re Psi among successful points.
  std::optional<std::size_t> argmin;
};

ScanResult scan_theta(const Real& c, const std::vector<Real>& eps_grid, PrecisionContext ctx,
                      Exec exec = Exec::parallel, ProbeMode mode = ProbeMode::on_circle);

/// One row of the published table of boundary values: theta = (2 - 10^-k) pi.
struct Table1Row {
  const char* c;
  int k;
  double published_re_psi;
};

/// The ten published rows in order, including the repeated c = 0.4 row.
const std::vector<Table1Row>& table1_rows();

struct HyperSum {
  Complex value;
  Real last_term;  // modulus of the last term added
};

/// Partial sum over n < terms of (a)_n (b)_n / ((cc)_n n!) z^n.
/// DomainError when cc is a non-positive integer or |z| >= 1.
HyperSum hyper_f(const Real& a, const Real& b, const Real& cc, const Complex& z, int terms);

/// Coefficients of F(a, b; cc; z) through `order`.
TruncatedSeries hyper_series(const Real& a, const Real& b, const Real& cc, int order);

/// max_{n <= order} |[z^n](1 - c + c F(c+1,1;2;z)/F(c,1;2;z)) - D_n|, D_n the
/// F(c) psi coefficients from the recurrence. Rejects c = 1.
Real hyper_ratio_identity_check(const Real& c, int order);

/// a + b - 1 < cc < a + b + 1/2 and (cc - a)(cc - b) > 0.
bool sugawa_predicate(const Real& a, const Real& b, const Real& cc);

}  // namespace logcoef
