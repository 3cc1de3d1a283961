#include "logcoef/regions.hpp"

#include "logcoef/error.hpp"

namespace logcoef {

std::string_view region_name(Region r) {
  switch (r) {
    case Region::D1: return "D1";
    case Region::D2: return "D2";
    case Region::D3: return "D3";
    case Region::D4: return "D4";
    case Region::D5: return "D5";
    case Region::D6: return "D6";
    case Region::D7: return "D7";
    case Region::D8: return "D8";
    case Region::D9: return "D9";
    case Region::D10: return "D10";
    case Region::D11: return "D11";
    case Region::D12: return "D12";
    case Region::SpecialPoint21: return "SpecialPoint21";
  }
  return "?";
}

namespace ps_edges {
Real d2_lower(const Real& m) {
  Real m1 = m + Real(1);
  return Real(4) * m1 * m1 * m1 / 27L - m1;
}
Real d4_upper(const Real& m) { return -(Real(2) * (m + Real(1)) / 3L); }
Real d6_lower(const Real& mu) { return (mu * mu + Real(8)) / 12L; }
Real d9_upper(const Real& m) { return Real(2) * m * (m + Real(1)) / (m * m + Real(2) * m + Real(4)); }
Real d11_upper(const Real& m) { return Real(2) * m * (m - Real(1)) / (m * m - Real(2) * m + Real(4)); }
}  // namespace ps_edges

Region ps_classify(const Real& mu, const Real& nu) {
  using namespace ps_edges;
  const Real m = abs(mu);
  const Real half = Real(1) / 2L;
  const Real one(1), two(2), four(4);
  if (mu == two && nu == one) return Region::SpecialPoint21;
  if (m <= half && nu >= -one && nu <= one) return Region::D1;
  if (m >= half && m <= two && nu >= d2_lower(m) && nu <= one) return Region::D2;
  if (m <= half && nu <= -one) return Region::D3;
  if (m >= half && nu <= d4_upper(m)) return Region::D4;
  if (m <= two && nu >= one) return Region::D5;
  if (m >= two && m <= four && nu >= d6_lower(mu)) return Region::D6;
  if (m >= four && nu >= Real(2) * (m - one) / 3L) return Region::D7;
  if (m >= half && m <= two && nu >= d4_upper(m) && nu <= d2_lower(m)) return Region::D8;
  if (m >= two && nu >= d4_upper(m) && nu <= d9_upper(m)) return Region::D9;
  if (m >= two && m <= four && nu >= d9_upper(m) && nu <= d6_lower(mu)) return Region::D10;
  if (m >= four && nu >= d9_upper(m) && nu <= d11_upper(m)) return Region::D11;
  if (m >= four && nu >= d11_upper(m) && nu <= Real(2) * (m - one) / 3L) return Region::D12;
  throw Error("ps_classify: (" + mu.str(20) + ", " + nu.str(20) + ") lies in no region");
}

Real ps_bound_in(Region region, const Real& mu, const Real& nu) {
  const Real m = abs(mu);
  const Real one(1);
  switch (region) {
    case Region::D1:
    case Region::D2:
    case Region::SpecialPoint21: return one;
    case Region::D3:
    case Region::D4:
    case Region::D5:
    case Region::D6:
    case Region::D7: return abs(nu);
    case Region::D8:
    case Region::D9: {
      Real m1 = m + one;
      return Real(2) * m1 / 3L * sqrt(m1 / (Real(3) * (m1 + nu)));
    }
    case Region::D10:
    case Region::D11: {
      Real mu2m4 = mu * mu - Real(4);
      return nu / 3L * (mu2m4 / (mu * mu - Real(4) * nu)) * sqrt(mu2m4 / (Real(3) * (nu - one)));
    }
    case Region::D12: {
      Real mm1 = m - one;
      return Real(2) * mm1 / 3L * sqrt(mm1 / (Real(3) * (mm1 - nu)));
    }
  }
  throw Error("unknown region");
}

Real ps_bound(const Real& mu, const Real& nu) { return ps_bound_in(ps_classify(mu, nu), mu, nu); }

}  // namespace logcoef
