#pragma once

#include "logcoef/arith/real.hpp"

#include <string>
#include <vector>

namespace logcoef {

/// Weights w_n of the partial sums sum w_n |gamma_n|^2 <= 1/4 sum (w_n/n^2) |psi_n|^2.
class WeightSpec {
public:
  enum class Kind { n_squared, t_power, roth, custom };

  static WeightSpec n_squared();
  /// w_n = (n + 1)^t. Any real t is accepted; t > 2 is outside the
  /// range the inequalities are stated for (see in_scope()).
  static WeightSpec t_power(double t);
  /// w_n = (n / (n + 1))^2.
  static WeightSpec roth();
  /// w_1, w_2, ... given explicitly; throws DomainError unless all positive.
  static WeightSpec custom(std::vector<double> w);
  /// "n2", "t=<t>", "roth" or "custom=<w1>,<w2>,...".
  static WeightSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  double t() const { return t_; }
  /// w_n, n >= 1. Custom weights are only defined up to their length.
  Real w(int n) const;
  /// Largest n for which w(n) is defined.
  int max_index() const;

  /// w_n / n^2 non-increasing for n = 1..n_max, checked numerically.
  bool ratio_non_increasing(int n_max) const;
  /// False for t_power with t > 2.
  bool in_scope() const { return kind_ != Kind::t_power || t_ <= 2.0; }

  std::string label() const;

private:
  WeightSpec(Kind k, double t, std::vector<double> custom) : kind_(k), t_(t), custom_(std::move(custom)) {}
  Kind kind_;
  double t_;
  std::vector<double> custom_;
};

}  // namespace logcoef
