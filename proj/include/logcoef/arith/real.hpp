#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace logcoef {

/// Binary significand precision shared by one computation.
struct PrecisionContext {
  long bits = 256;

  /// Throws DomainError when bits < 64.
  static PrecisionContext checked(long bits);
};

/// Precision used for freshly constructed Real values on this thread.
long working_bits() noexcept;

/// Sets the thread's working precision for the guard's lifetime. Parallel
/// regions open one guard per thread.
class PrecisionGuard {
public:
  explicit PrecisionGuard(PrecisionContext ctx);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
  long saved_;
};

/// Owning MPFR real. Binary operations produce a result at the larger of
/// the operand precisions; literals and defaults use working_bits().
class Real {
public:
  Real();
  Real(int v);
  Real(long v);
  Real(double v);

  static Real with_bits(long bits);
  /// Decimal or scientific text; throws DomainError on malformed input.
  static Real parse(std::string_view text, long bits = working_bits());

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string str(int digits = 40) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
  explicit Real(mpfr_prec_t prec, int);  // uninitialized value at prec
  void adopt_prec_for(const Real& o);

  mpfr_t v_;
};

Real pi(long bits = working_bits());
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);
/// 2^e at working precision.
Real exp2i(long e);

}  // namespace logcoef
