#include "support.hpp"

#include "logcoef/probe.hpp"
#include "logcoef/verify.hpp"

#include <omp.h>

using namespace logcoef;
using testing::R;

namespace {

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("coverage scan: serial and parallel agree") {
  Threads t(4);
  CoverageReport s = coverage_scan(61, Exec::serial);
  CoverageReport p = coverage_scan(61, Exec::parallel);
  CHECK(s.points == p.points);
  CHECK(s.counts == p.counts);
  CHECK(s.uncovered == p.uncovered);
  CHECK(s.uncovered_examples == p.uncovered_examples);
}

TEST_CASE("sample batch: serial and parallel agree") {
  Threads t(4);
  std::vector<SchwarzSample> s = sample_batch(3, 64, 6, Exec::serial);
  std::vector<SchwarzSample> p = sample_batch(3, 64, 6, Exec::parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].describe() == p[i].describe());
    CHECK(max_abs_diff(s[i].series(), p[i].series()).is_zero());
  }
}

TEST_CASE("Monte Carlo: serial and parallel agree bit for bit") {
  Threads t(4);
  PrecisionGuard g(PrecisionContext{192});  // workers must inherit the caller's precision
  ClassSpec spec = ClassSpec::janowski(R("0.3"), R("-0.9"));
  std::vector<WeightSpec> w = {WeightSpec::n_squared(), WeightSpec::roth()};
  MonteCarloReport s = monte_carlo_class(spec, 150, 21, 6, w, Exec::serial);
  MonteCarloReport p = monte_carlo_class(spec, 150, 21, 6, w, Exec::parallel);
  for (int k = 0; k < 3; ++k) {
    CHECK(s.max_gamma[k] == p.max_gamma[k]);
    CHECK(s.argmax[k] == p.argmax[k]);
    CHECK(p.max_gamma[k].bits() == 192);
  }
  CHECK(s.min_margin[0] == p.min_margin[0]);
  CHECK(s.min_margin[1] == p.min_margin[1]);
  CHECK(*s.max_formula_deviation == *p.max_formula_deviation);
  CHECK(s.findings.size() == p.findings.size());
  CHECK(s.inequality_checks == p.inequality_checks);
}

TEST_CASE("theta scan: serial and parallel agree") {
  Threads t(4);
  std::vector<Real> grid;
  for (int k = 1; k <= 24; ++k) grid.push_back(pow(Real(10), Real(-k)));
  grid.push_back(Real(0));  // a failing point keeps its slot
  ScanResult s = scan_theta(R("0.75"), grid, PrecisionContext{256}, Exec::serial);
  ScanResult p = scan_theta(R("0.75"), grid, PrecisionContext{256}, Exec::parallel);
  REQUIRE(s.points.size() == p.points.size());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    CHECK(s.points[i].probe.has_value() == p.points[i].probe.has_value());
    if (s.points[i].probe) CHECK(s.points[i].probe->re_psi_cap == p.points[i].probe->re_psi_cap);
    CHECK(s.points[i].error == p.points[i].error);
  }
  CHECK(s.argmin == p.argmin);
}
