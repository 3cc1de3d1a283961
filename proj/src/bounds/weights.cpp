#include "logcoef/weights.hpp"

#include "logcoef/error.hpp"

#include <climits>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace logcoef {

namespace {

double parse_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end == s.c_str() || *end != '\0') throw DomainError("malformed number in weight spec: '" + s + "'");
  return v;
}

std::string short_double(double d) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, d);
    if (std::strtod(buf, nullptr) == d) break;
  }
  return buf;
}

}  // namespace

WeightSpec WeightSpec::n_squared() { return WeightSpec(Kind::n_squared, 0.0, {}); }

WeightSpec WeightSpec::t_power(double t) { return WeightSpec(Kind::t_power, t, {}); }

WeightSpec WeightSpec::roth() { return WeightSpec(Kind::roth, 0.0, {}); }

WeightSpec WeightSpec::custom(std::vector<double> w) {
  if (w.empty()) throw DomainError("custom weights need at least one value");
  for (double x : w)
    if (!(x > 0.0)) throw DomainError("custom weights must be positive");
  return WeightSpec(Kind::custom, 0.0, std::move(w));
}

WeightSpec WeightSpec::parse(const std::string& text) {
  if (text == "n2" || text == "n^2" || text == "n_squared") return n_squared();
  if (text == "roth") return roth();
  auto eq = text.find('=');
  if (eq != std::string::npos) {
    std::string key = text.substr(0, eq);
    std::string val = text.substr(eq + 1);
    if (key == "t" || key == "t_power") return t_power(parse_double(val));
    if (key == "custom") {
      std::vector<double> w;
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ',')) w.push_back(parse_double(item));
      return custom(std::move(w));
    }
  }
  throw DomainError("unknown weight '" + text + "' (expected n2, t=<t>, roth or custom=<w1>,...)");
}

Real WeightSpec::w(int n) const {
  if (n < 1 || n > max_index()) throw DomainError("weight index " + std::to_string(n) + " out of range");
  switch (kind_) {
    case Kind::n_squared: return Real(static_cast<long>(n) * n);
    case Kind::t_power: return pow(Real(static_cast<long>(n) + 1), Real(t_));
    case Kind::roth: {
      Real r = Real(static_cast<long>(n)) / static_cast<long>(n + 1);
      return r * r;
    }
    case Kind::custom: return Real(custom_[static_cast<std::size_t>(n - 1)]);
  }
  throw Error("unknown weight kind");
}

int WeightSpec::max_index() const { return kind_ == Kind::custom ? static_cast<int>(custom_.size()) : INT_MAX; }

bool WeightSpec::ratio_non_increasing(int n_max) const {
  n_max = std::min(n_max, max_index());
  Real prev;
  for (int n = 1; n <= n_max; ++n) {
    Real r = w(n) / static_cast<long>(n) / static_cast<long>(n);
    if (n > 1 && r > prev) return false;
    prev = r;
  }
  return true;
}

std::string WeightSpec::label() const {
  switch (kind_) {
    case Kind::n_squared: return "n2";
    case Kind::t_power: return "t=" + short_double(t_);
    case Kind::roth: return "roth";
    case Kind::custom: {
      std::string s = "custom=";
      for (std::size_t i = 0; i < custom_.size(); ++i) s += (i ? "," : "") + short_double(custom_[i]);
      return s;
    }
  }
  return "?";
}

}  // namespace logcoef
