#include "grids.hpp"
#include "support.hpp"

#include "logcoef/classes.hpp"
#include "logcoef/error.hpp"
#include "logcoef/gamma.hpp"
#include "logcoef/regions.hpp"

#include <random>

using namespace logcoef;
using testing::eps_bits;
using testing::near;
using testing::R;

namespace {

// Largest |a_n - b_n| / max(1, |b_n|).
Real rel_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  Real worst;
  int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) worst = max(worst, abs(a[k] - b[k]) / max(Real(1), abs(b[k])));
  return worst;
}

// Bernoulli numbers B_0..B_n with B_1 = -1/2, from sum_{k<=m} C(m+1,k) B_k = 0.
std::vector<Real> bernoulli(int n) {
  std::vector<Real> b(static_cast<std::size_t>(n + 1));
  b[0] = Real(1);
  for (int m = 1; m <= n; ++m) {
    Real s, binom(1);  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += binom * b[static_cast<std::size_t>(k)];
      binom = binom * static_cast<long>(m + 1 - k) / static_cast<long>(k + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / static_cast<long>(m + 1);
  }
  return b;
}

}  // namespace

TEST_CASE("phi coefficients") {
  TruncatedSeries p = phi_series(ClassSpec::fc(R("0.5")), 5);
  for (int n = 1; n <= 5; ++n) CHECK(near(p[n], Complex(R("0.5")), eps_bits(4)));

  // (1 + 0.5 z)/(1 - 0.5 z): B_n = 1 * 0.5^{n-1}
  p = phi_series(ClassSpec::janowski(R("0.5"), R("-0.5")), 6);
  for (int n = 1; n <= 6; ++n) CHECK(near(p[n], Complex(pow(R("0.5"), Real(n - 1))), eps_bits(4)));

  Real alpha = R("0.3");
  p = phi_series(ClassSpec::robertson(alpha), 4);
  Complex b(Real(1) + cos(alpha * 2L), -sin(alpha * 2L));
  for (int n = 1; n <= 4; ++n) CHECK(near(p[n], b, eps_bits(4)));
  CHECK(near(p[0], Complex(1L), eps_bits(4)));
}

TEST_CASE("class parameters are validated") {
  CHECK_THROWS_AS(ClassSpec::fc(Real(0)), DomainError);
  CHECK_THROWS_AS(ClassSpec::fc(R("3.01")), DomainError);
  CHECK_NOTHROW(ClassSpec::fc(Real(3)));
  CHECK_THROWS_AS(ClassSpec::janowski(R("0.5"), R("0.5")), DomainError);
  CHECK_THROWS_AS(ClassSpec::janowski(R("1.1"), Real(0)), DomainError);
  CHECK_THROWS_AS(ClassSpec::janowski(Real(0), R("-1.1")), DomainError);
  CHECK_THROWS_AS(ClassSpec::robertson(pi() / 2L), DomainError);
  CHECK(ClassSpec::parse("janowski=0.5,-0.5") == ClassSpec::janowski(R("0.5"), R("-0.5")));
  CHECK(ClassSpec::parse("fc=2").is_fc());
  CHECK(ClassSpec::parse("robertson=0.3").is_robertson());
  CHECK_THROWS_AS(ClassSpec::parse("koebe=1"), DomainError);
  CHECK_THROWS_AS(ClassSpec::parse("janowski=0.5"), DomainError);
  CHECK(ClassSpec::fc(R("2.5")).exploratory());
  CHECK_FALSE(ClassSpec::fc(Real(2)).exploratory());
}

TEST_CASE("psi recurrence agrees with the closed form across the parameter grid") {
  const int N = 200;
  for (const ClassSpec& spec : testing::generator_grid()) {
    CAPTURE(spec.label());
    TruncatedSeries rec = psi_series_recurrence(spec, N);
    TruncatedSeries closed = psi_series_closed(spec, N);
    CHECK(rec.order() == N);
    CHECK(rel_diff(rec, closed) <= eps_bits(24));
  }
}

TEST_CASE("psi of F(2) is 1/(1-z)") {
  TruncatedSeries psi = psi_series_recurrence(ClassSpec::fc(Real(2)), 40);
  for (int n = 0; n <= 40; ++n) CHECK(near(psi[n], Complex(1L), eps_bits(8)));
}

TEST_CASE("psi of F(1) against long division of -z/((1-z) log(1-z))") {
  const int N = 30;
  // q = (1 - z) sum z^n/(n+1), psi = 1/q, solved term by term
  std::vector<Real> q(N + 1), psi(N + 1);
  for (int n = 0; n <= N; ++n) q[n] = Real(1) / static_cast<long>(n + 1) - (n ? Real(1) / static_cast<long>(n) : Real(0));
  psi[0] = Real(1) / q[0];
  for (int n = 1; n <= N; ++n) {
    Real s;
    for (int k = 1; k <= n; ++k) s += q[k] * psi[n - k];
    psi[n] = -s / q[0];
  }
  TruncatedSeries got = psi_series_recurrence(ClassSpec::fc(Real(1)), N);
  for (int n = 0; n <= N; ++n) CHECK(near(got[n], Complex(psi[n]), eps_bits(12)));
  CHECK(near(got[1], Complex(R("0.5")), eps_bits(8)));
}

TEST_CASE("psi of C(0,B): first two coefficients") {
  for (const char* bs : {"-0.5", "-0.81", "-1", "-0.2"}) {
    Real b = R(bs);
    TruncatedSeries psi = psi_series_recurrence(ClassSpec::janowski(Real(0), b), 2);
    CHECK(near(psi[1], Complex(-b / 2L), eps_bits(8)));
    CHECK(near(psi[2], Complex(Real(5) * b * b / 12L), eps_bits(8)));
  }
}

TEST_CASE("psi of C(A,0) is Az/(1 - e^{-Az}), a Bernoulli generating function") {
  const int N = 24;
  Real a = R("0.5");
  std::vector<Real> bn = bernoulli(N);
  TruncatedSeries psi = psi_series_recurrence(ClassSpec::janowski(a, Real(0)), N);
  Real fact(1), an(1);
  for (int n = 0; n <= N; ++n) {
    if (n) {
      fact = fact * static_cast<long>(n);
      an = an * a;
    }
    Real expect = bn[static_cast<std::size_t>(n)] * an / fact;
    if (n % 2) expect = -expect;
    CHECK(near(psi[n], Complex(expect), eps_bits(16)));
  }
}

TEST_CASE("psi of the Robertson class with alpha = 0 is 1/(1-z)") {
  TruncatedSeries psi = psi_series_recurrence(ClassSpec::robertson(Real(0)), 50);
  for (int n = 0; n <= 50; ++n) CHECK(near(psi[n], Complex(1L), eps_bits(8)));
}

TEST_CASE("extremal functions") {
  // f_2 = z/(1-z)
  TruncatedSeries f = extremal_series(ClassSpec::fc(Real(2)), 20);
  CHECK(f[0].is_zero());
  for (int n = 1; n <= 20; ++n) CHECK(near(f[n], Complex(1L), eps_bits(8)));
  // K_{1,-1} = z/(1-z)
  f = extremal_series(ClassSpec::janowski(Real(1), Real(-1)), 20);
  for (int n = 1; n <= 20; ++n) CHECK(near(f[n], Complex(1L), eps_bits(8)));
  // f_1 = -log(1-z)
  f = extremal_series(ClassSpec::fc(Real(1)), 10);
  for (int n = 1; n <= 10; ++n) CHECK(near(f[n], Complex(Real(1) / static_cast<long>(n)), eps_bits(8)));

  // Robertson: f' = (1-z)^{-(1+A)}, so n a_n = (1+A)(2+A)...(n-1+A)/(n-1)!
  ClassSpec rob = ClassSpec::robertson(R("0.3"));
  Complex A = rob.robertson_a();
  f = extremal_series(rob, 12);
  Complex prod(1L);
  for (int n = 1; n <= 12; ++n) {
    if (n > 1) prod = prod * (A + Complex(static_cast<long>(n - 1))) / static_cast<long>(n - 1);
    CHECK(near(f[n] * static_cast<long>(n), prod, eps_bits(12)));
  }
}

TEST_CASE("extremal members satisfy 2 n gamma_n = psi_n") {
  const int N = 30;
  for (const ClassSpec& spec : testing::generator_grid()) {
    CAPTURE(spec.label());
    GammaVector g = log_coeffs(extremal_member(spec, N + 1), N);
    TruncatedSeries psi = psi_series_recurrence(spec, N);
    Real worst;
    for (int n = 1; n <= N; ++n) worst = max(worst, abs(g(n) * static_cast<long>(2 * n) - psi[n]) / max(Real(1), abs(psi[n])));
    CHECK(worst <= eps_bits(24));
  }
}

TEST_CASE("extremal via omega = z reproduces the closed-form extremal") {
  for (const ClassSpec& spec : testing::generator_grid()) {
    CAPTURE(spec.label());
    ClassMember m = member_from_schwarz(spec, SchwarzSample::monomial(1, 20), 20);
    CHECK(rel_diff(m.series(), extremal_series(spec, 20)) <= eps_bits(24));
  }
}

TEST_CASE("Janowski g1 coefficients") {
  for (auto [as, bs] : {std::pair{"0.5", "-0.3"}, std::pair{"1", "-1"}, std::pair{"0.9", "0.3"}}) {
    Real a = R(as), b = R(bs);
    TruncatedSeries f = named_extremal(ClassSpec::janowski(a, b), "g1", 4).series();
    CHECK(near(f[1], Complex(1L), eps_bits(8)));
    CHECK(near(f[2], Complex((a - b) / 2L), eps_bits(8)));
    CHECK(near(f[3], Complex((a - b) * (a - Real(2) * b) / 6L), eps_bits(8)));
    CHECK(near(f[4], Complex((a - b) * (a - Real(2) * b) * (a - Real(3) * b) / 24L), eps_bits(8)));
  }
}

TEST_CASE("members from z^2 and z^3") {
  Real a = R("0.4"), b = R("-0.7");
  ClassSpec spec = ClassSpec::janowski(a, b);
  TruncatedSeries f2 = named_extremal(spec, "g2", 4).series();
  CHECK(f2[2].is_zero());
  CHECK(near(f2[3], Complex((a - b) / 6L), eps_bits(8)));
  TruncatedSeries f3 = named_extremal(spec, "g3", 4).series();
  CHECK(f3[2].is_zero());
  CHECK(f3[3].is_zero());
  CHECK(near(f3[4], Complex((a - b) / 12L), eps_bits(8)));

  TruncatedSeries fc = named_extremal(ClassSpec::fc(R("1.5")), "g2", 3).series();
  CHECK(near(fc[3], Complex(R("0.25")), eps_bits(8)));
}

TEST_CASE("named extremal errors") {
  ClassSpec spec = ClassSpec::janowski(Real(0), R("-0.5"));
  CHECK_THROWS_AS(named_extremal(spec, "h2", 4), DomainError);
  CHECK_THROWS_AS(named_extremal(spec, "g5", 4), DomainError);
  CHECK_THROWS_AS(named_extremal(ClassSpec::fc(Real(1)), "g4", 4), DomainError);
  // (0,-0.5): mu = 1.25, nu = 0.375, not in D8 or D9
  CHECK_THROWS_AS(named_extremal(spec, "g4", 4), DomainError);
  CHECK_NOTHROW(named_extremal(ClassSpec::robertson(R("0.2")), "h2", 4));
}

TEST_CASE("g4 parameter lies in (0,1) where g4 is defined") {
  ClassSpec spec = ClassSpec::janowski(Real(0), R("-0.81"));
  auto [mu, nu] = janowski_mu_nu(Real(0), R("-0.81"));
  Region r = ps_classify(mu, nu);
  REQUIRE((r == Region::D8 || r == Region::D9));
  Real c = g4_parameter(mu, nu);
  CHECK(c > Real(0));
  CHECK(c < Real(1));
  SchwarzSample w = g4_omega(spec, 6);
  CHECK(w.boundary_max() <= Real(1) + eps_bits(16));
  // omega = z (c - s z)/(1 - s c z), s = sign(mu) = 1: c1 = c, c2 = c^2 - 1
  CHECK(near(w.coeff(1), Complex(c), eps_bits(8)));
  CHECK(near(w.coeff(2), Complex(c * c - Real(1)), eps_bits(8)));
}

TEST_CASE("member coefficients satisfy 1 + z f''/f' = phi(omega) on random samples") {
  std::vector<ClassSpec> specs = testing::generator_grid();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SchwarzSample w = sample_schwarz(seed, SampleKind::mixed, 8);
    const ClassSpec& spec = specs[seed % specs.size()];
    CAPTURE(spec.label());
    CAPTURE(w.describe());
    ClassMember m = member_from_schwarz(spec, w, 8);
    TruncatedSeries f = m.series();
    CHECK(f[0].is_zero());
    CHECK(near(f[1], Complex(1L), eps_bits(8)));
    // generic composition as the oracle for phi(omega)
    TruncatedSeries target = compose(phi_series(spec, 7), w.series().truncated(7));
    TruncatedSeries fp = derive(f);
    TruncatedSeries lhs = TruncatedSeries::one(7) + mul(shift_up(derive(fp)), recip(fp.truncated(6))).truncated(6);
    CHECK(max_abs_diff(lhs, target) <= eps_bits(40));
    CHECK(max_abs_diff(phi_of(spec, w.series().truncated(7)), target) <= eps_bits(40));
  }
}

TEST_CASE("member_from_schwarz rejects short Schwarz series") {
  CHECK_THROWS_AS(member_from_schwarz(ClassSpec::fc(Real(1)), SchwarzSample::monomial(1, 3), 8), DomainError);
  CHECK_THROWS_AS(member_from_schwarz(ClassSpec::fc(Real(1)), SchwarzSample::monomial(1, 3), 0), DomainError);
}

TEST_CASE("Schwarz samples") {
  SchwarzSample z2 = SchwarzSample::monomial(2, 5);
  CHECK(near(z2.coeff(2), Complex(1L), eps_bits(4)));
  CHECK(z2.coeff(1).is_zero());

  Complex rot = Complex::polar(Real(1), R("0.7"));
  SchwarzSample b = SchwarzSample::blaschke(rot, {Complex(0L)}, 5);
  CHECK(near(b.coeff(2), rot, eps_bits(8)));
  CHECK(b.coeff(1).is_zero());
  CHECK_THROWS_AS(SchwarzSample::blaschke(rot, {Complex(1L)}, 5), DomainError);
  CHECK_THROWS_AS(SchwarzSample::blaschke(Complex(R("1.1")), {}, 5), DomainError);

  SchwarzSample p = SchwarzSample::polynomial({Complex(0L), Complex(R("0.5"))}, 5);
  CHECK(near(p.coeff(2), Complex(R("0.5")), eps_bits(8)));
  CHECK_THROWS_AS(SchwarzSample::polynomial({Complex(0L), Complex(2L)}, 5), DomainError);

  Complex z(R("0.3"), R("-0.4"));
  CHECK(near(b.evaluate(z), evaluate(b.series(), z), R("1e-3")));
}

TEST_CASE("sample_schwarz is deterministic and stays in the disk") {
  for (SampleKind k : {SampleKind::mobius_blaschke, SampleKind::scaled_polynomial, SampleKind::mixed}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      SchwarzSample a = sample_schwarz(seed, k, 10), b = sample_schwarz(seed, k, 10);
      CHECK(a.describe() == b.describe());
      CHECK(max_abs_diff(a.series(), b.series()).is_zero());
      CHECK(a.series()[0].is_zero());
      CHECK(a.boundary_max(1440) <= Real(1) + eps_bits(16));
    }
  }
  CHECK(near(sample_schwarz(5, SampleKind::monomial, 6, 3).coeff(3), Complex(1L), eps_bits(4)));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
}
