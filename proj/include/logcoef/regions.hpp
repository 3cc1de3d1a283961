#pragma once

#include "logcoef/arith/real.hpp"

#include <string_view>

namespace logcoef {

/// Regions of the (mu, nu) plane on which the sharp maximum of
/// |c3 + mu c1 c2 + nu c1^3| over Schwarz functions has one closed form.
enum class Region { D1, D2, D3, D4, D5, D6, D7, D8, D9, D10, D11, D12, SpecialPoint21 };

std::string_view region_name(Region r);

/// First region (in order D1..D12, with the exceptional point (2, 1)
/// tested first) whose defining inequalities hold. Throws Error if none
/// does, which would mean the partition has a hole.
Region ps_classify(const Real& mu, const Real& nu);

/// Closed-form bound for a given region, without checking membership.
Real ps_bound_in(Region region, const Real& mu, const Real& nu);

/// max |c3 + mu c1 c2 + nu c1^3| over the Schwarz class.
Real ps_bound(const Real& mu, const Real& nu);

/// Edges of the partition that appear in the classification, as functions of |mu|.
namespace ps_edges {
Real d2_lower(const Real& m);   // 4/27 (m+1)^3 - (m+1)
Real d4_upper(const Real& m);   // -2/3 (m+1)
Real d6_lower(const Real& mu);  // (mu^2 + 8) / 12
Real d9_upper(const Real& m);   // 2m(m+1) / (m^2 + 2m + 4)
Real d11_upper(const Real& m);  // 2m(m-1) / (m^2 - 2m + 4)
}  // namespace ps_edges

}  // namespace logcoef
