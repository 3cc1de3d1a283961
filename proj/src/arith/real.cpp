#include "logcoef/arith/real.hpp"

#include "logcoef/error.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace logcoef {

namespace {
thread_local long tl_working_bits = 256;

mpfr_prec_t max_prec(const Real& a, const Real& b) {
  return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}
}  // namespace

PrecisionContext PrecisionContext::checked(long bits) {
  if (bits < 64) throw DomainError("precision must be at least 64 bits, got " + std::to_string(bits));
  return PrecisionContext{bits};
}

long working_bits() noexcept { return tl_working_bits; }

PrecisionGuard::PrecisionGuard(PrecisionContext ctx) : saved_(tl_working_bits) {
  tl_working_bits = PrecisionContext::checked(ctx.bits).bits;
}

PrecisionGuard::~PrecisionGuard() { tl_working_bits = saved_; }

Real::Real(mpfr_prec_t prec, int) { mpfr_init2(v_, prec); }

Real::Real() {
  mpfr_init2(v_, tl_working_bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
  mpfr_init2(v_, tl_working_bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(v_, tl_working_bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real Real::with_bits(long bits) {
  Real r(static_cast<mpfr_prec_t>(bits), 0);
  mpfr_set_zero(r.v_, 1);
  return r;
}

Real Real::parse(std::string_view text, long bits) {
  Real r(static_cast<mpfr_prec_t>(bits), 0);
  std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("malformed number: '" + s + "'");
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

// A moved-from Real keeps a null limb pointer and is only destroyed or
// assigned to.
Real::Real(Real&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (v_[0]._mpfr_d == nullptr) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
  } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
  }
  mpfr_set(v_, other.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

void Real::adopt_prec_for(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
}

std::string Real::str(int digits) const {
  if (mpfr_zero_p(v_)) return "0." + std::string(static_cast<std::size_t>(std::max(digits - 1, 1)), '0') + "e+00";
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Re", digits - 1, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Real& Real::operator+=(const Real& o) {
  adopt_prec_for(o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  adopt_prec_for(o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  adopt_prec_for(o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  adopt_prec_for(o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(mpfr_get_prec(v_), 0);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b), 0);
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b), 0);
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b), 0);
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b), 0);
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(mpfr_get_prec(a.v_), 0);
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(mpfr_get_prec(a.v_), 0);
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {
template <class F>
Real unary(const Real& x, F f) {
  Real r = Real::with_bits(x.bits());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace

Real pi(long bits) {
  Real r = Real::with_bits(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }

Real atan2(const Real& y, const Real& x) {
  Real r = Real::with_bits(std::max(y.bits(), x.bits()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = Real::with_bits(std::max(y.bits(), x.bits()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::with_bits(std::max(y.bits(), x.bits()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = Real::with_bits(x.bits());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real exp2i(long e) {
  Real r(1L);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

}  // namespace logcoef
