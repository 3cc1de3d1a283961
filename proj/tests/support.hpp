#pragma once

#include "logcoef/arith/complex.hpp"
#include "logcoef/series.hpp"

#include "doctest.h"

#include <string>

namespace testing {

using logcoef::Complex;
using logcoef::Real;

inline Real R(const char* s) { return Real::parse(s); }

/// 2^-(bits - slack) at the working precision.
inline Real eps_bits(long slack) { return logcoef::exp2i(-(logcoef::working_bits() - slack)); }

inline bool near(const Real& a, const Real& b, const Real& tol) { return logcoef::abs(a - b) <= tol; }
inline bool near(const Complex& a, const Complex& b, const Real& tol) { return logcoef::abs(a - b) <= tol; }

inline std::string show(const Complex& z) { return logcoef::to_string(z, 25); }
inline std::string show(const Real& x) { return x.str(25); }

}  // namespace testing
