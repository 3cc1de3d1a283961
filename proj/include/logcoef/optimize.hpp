#pragma once

#include "logcoef/arith/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace logcoef {

struct ScalarMax {
  double x = 0.0;
  Real value;
  long evaluations = 0;
};

/// Golden-section search for the maximum of f on [lo, hi], f assumed
/// unimodal there. Stops after `iterations` shrink steps.
template <class F>
ScalarMax golden_section_max(F&& f, double lo, double hi, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  Real f1 = f(x1), f2 = f(x2);
  long evals = 2;
  for (int it = 0; it < iterations && x2 > x1; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
    ++evals;
  }
  return f1 < f2 ? ScalarMax{x2, f2, evals} : ScalarMax{x1, f1, evals};
}

/// Coarse grid over [lo, hi], narrowed to the neighbours of the best grid
/// point for `rounds` rounds, then golden-section search inside the final
/// bracket. `budget` caps the number of evaluations.
template <class F>
ScalarMax grid_golden_max(F&& f, double lo, double hi, long budget, int rounds = 3) {
  const long grid = std::max(5L, budget / (2L * rounds));
  ScalarMax best;
  bool have = false;
  long evals = 0;
  for (int r = 0; r < rounds; ++r) {
    std::vector<double> xs(static_cast<std::size_t>(grid));
    std::size_t arg = 0;
    Real local;
    for (long i = 0; i < grid; ++i) {
      xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
      Real v = f(xs[static_cast<std::size_t>(i)]);
      ++evals;
      if (i == 0 || v > local) {
        local = v;
        arg = static_cast<std::size_t>(i);
      }
      if (!have || v > best.value) {
        best = {xs[static_cast<std::size_t>(i)], v, 0};
        have = true;
      }
    }
    lo = xs[arg == 0 ? 0 : arg - 1];
    hi = xs[std::min(arg + 1, xs.size() - 1)];
  }
  const long left = budget - evals - 2;
  if (left > 0) {
    ScalarMax g = golden_section_max(f, lo, hi, static_cast<int>(left));
    evals += g.evaluations;
    if (g.value > best.value) best = {g.x, g.value, 0};
  }
  best.evaluations = evals;
  return best;
}

}  // namespace logcoef
