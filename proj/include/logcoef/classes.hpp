#pragma once

#include "logcoef/class_spec.hpp"
#include "logcoef/schwarz.hpp"
#include "logcoef/series.hpp"

#include <string>

namespace logcoef {

/// phi = 1 + sum B_n z^n of the class: F(c) gives B_n = c, C(A,B) gives
/// (A-B)(-B)^{n-1}, the Robertson class gives 1 + e^{-2i alpha}.
TruncatedSeries phi_series(const ClassSpec& spec, int order);

/// phi(omega(z)) through the rational form of phi (no generic composition).
TruncatedSeries phi_of(const ClassSpec& spec, const TruncatedSeries& omega);

/// Best dominant psi of psi + z psi'/psi = phi from the coefficient
/// recurrence (n+1) psi_n = B_n + sum_{k=1}^{n-1} (B_k - psi_k) psi_{n-k}.
TruncatedSeries psi_series_recurrence(const ClassSpec& spec, int order);

/// Same psi expanded from its closed form z K'/K with the factor z
/// divided out before inversion.
TruncatedSeries psi_series_closed(const ClassSpec& spec, int order);

/// Normalized extremal function: f_c, K_{A,B}, or ((1-z)^{-A} - 1)/A.
TruncatedSeries extremal_series(const ClassSpec& spec, int order);

/// A normalized series tied to the class it was built for. Only the
/// factories below create one, so holding a ClassMember means membership
/// was established by construction.
class ClassMember {
public:
  const ClassSpec& spec() const { return spec_; }
  const TruncatedSeries& series() const { return f_; }
  const std::string& provenance() const { return provenance_; }

private:
  ClassMember(ClassSpec spec, TruncatedSeries f, std::string provenance)
      : spec_(std::move(spec)), f_(std::move(f)), provenance_(std::move(provenance)) {}

  friend ClassMember extremal_member(const ClassSpec&, int);
  friend ClassMember member_from_schwarz(const ClassSpec&, const SchwarzSample&, int);

  ClassSpec spec_;
  TruncatedSeries f_;
  std::string provenance_;
};

ClassMember extremal_member(const ClassSpec& spec, int order);

/// f with 1 + z f''/f' = phi(omega(z)), built as
/// f' = exp(int_0^z (phi(omega(t)) - 1)/t dt), f = int f'. The defining
/// relation is re-checked on the result; order is that of f.
ClassMember member_from_schwarz(const ClassSpec& spec, const SchwarzSample& omega, int order);

/// Extremal members named by their Schwarz function: g1 (z), g2 (z^2),
/// g3 (z^3), g4 (the two-parameter Mobius map for Janowski classes with
/// (mu, nu) in D8 or D9), h2 (z, Robertson only).
ClassMember named_extremal(const ClassSpec& spec, const std::string& name, int order);

/// Schwarz function behind named_extremal's g4, and its parameter c.
SchwarzSample g4_omega(const ClassSpec& spec, int order);
Real g4_parameter(const Real& mu, const Real& nu);

/// Janowski (mu, nu) = ((A - 5B)/2, (3B^2 - AB)/2).
std::pair<Real, Real> janowski_mu_nu(const Real& a, const Real& b);

}  // namespace logcoef
