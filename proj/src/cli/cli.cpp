#include "logcoef/cli.hpp"

#include "logcoef/bounds.hpp"
#include "logcoef/classes.hpp"
#include "logcoef/error.hpp"
#include "logcoef/gamma.hpp"
#include "logcoef/probe.hpp"
#include "logcoef/series_io.hpp"
#include "logcoef/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#ifndef LOGCOEF_VERSION
#define LOGCOEF_VERSION "0.0.0"
#endif

namespace logcoef::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

// Everything a subcommand produces; rendered once the command is done.
struct Report {
  std::string class_label;
  ordered_json results = ordered_json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<ordered_json> findings;
};

std::string num(const Real& x) { return x.str(40); }

std::string dbl(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json cnum(const Complex& z) { return ordered_json::array({num(z.re), num(z.im)}); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& v) {
  char* end = nullptr;
  long x = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0') throw DomainError("malformed integer for " + key + ": '" + v + "'");
  return x;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  char* end = nullptr;
  unsigned long long x = std::strtoull(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || v[0] == '-') throw DomainError("malformed seed for " + key + ": '" + v + "'");
  return x;
}

void check_format(const std::string& f) {
  if (f != "json" && f != "csv") throw DomainError("format must be json or csv, got '" + f + "'");
}

ClassSpec parse_class(const std::string& text) {
  if (text.empty()) throw UsageError("--class is required");
  try {
    return ClassSpec::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Real parse_real(const std::string& name, const std::string& text) {
  try {
    return Real::parse(text);
  } catch (const DomainError&) {
    throw UsageError("malformed number for " + name + ": '" + text + "'");
  }
}

std::string region_str(const std::optional<Region>& r) { return r ? std::string(region_name(*r)) : ""; }

ordered_json bound_json(const BoundReport& b) {
  ordered_json j;
  j["gamma"] = b.gamma_index;
  j["value"] = num(b.value);
  j["branch"] = b.branch;
  j["region"] = b.region ? ordered_json(std::string(region_name(*b.region))) : ordered_json(nullptr);
  j["extremal"] = b.extremal;
  return j;
}

void add_finding(Report& rep, const std::string& kind, const std::string& detail) {
  rep.findings.push_back({{"kind", kind}, {"detail", detail}});
}

// ---- subcommands ---------------------------------------------------------

struct PsiArgs {
  std::string cls;
  bool closed = false;
};

void cmd_psi(const PsiArgs& a, const RunConfig& cfg, Report& rep) {
  ClassSpec spec = parse_class(a.cls);
  rep.class_label = spec.label();
  TruncatedSeries psi = a.closed ? psi_series_closed(spec, cfg.order) : psi_series_recurrence(spec, cfg.order);
  rep.results["method"] = a.closed ? "closed form" : "recurrence";
  rep.results["coefficients"] = series_to_json(psi);
  rep.csv_header = {"n", "re", "im"};
  for (int n = 0; n <= psi.order(); ++n) rep.csv_rows.push_back({std::to_string(n), num(psi[n].re), num(psi[n].im)});
}

struct GammaArgs {
  std::string cls;
  std::string member = "extremal";
};

void cmd_gamma(const GammaArgs& a, const RunConfig& cfg, Report& rep) {
  ClassSpec spec = parse_class(a.cls);
  rep.class_label = spec.label();
  const int n = cfg.order;
  ClassMember f = [&] {
    if (a.member == "extremal") return extremal_member(spec, n + 1);
    if (a.member == "sample")
      return member_from_schwarz(spec, sample_schwarz(cfg.seed, SampleKind::mixed, n), n + 1);
    if (a.member == "g1" || a.member == "g2" || a.member == "g3" || a.member == "g4" || a.member == "h2")
      return named_extremal(spec, a.member, n + 1);
    throw UsageError("--member must be extremal, sample, g1, g2, g3, g4 or h2");
  }();
  GammaVector g = log_coeffs(f, n);
  rep.results["member"] = f.provenance();
  ordered_json arr = ordered_json::array();
  rep.csv_header = {"n", "re", "im", "abs"};
  for (int k = 1; k <= n; ++k) {
    arr.push_back(cnum(g(k)));
    rep.csv_rows.push_back({std::to_string(k), num(g(k).re), num(g(k).im), num(abs(g(k)))});
  }
  rep.results["gamma"] = arr;
}

struct BoundsArgs {
  std::string cls;
  bool printed = false;
};

void cmd_bounds(const BoundsArgs& a, const RunConfig&, Report& rep) {
  ClassSpec spec = parse_class(a.cls);
  rep.class_label = spec.label();
  rep.csv_header = {"gamma", "value", "branch", "region", "extremal"};
  auto emit = [&](const GammaBounds& gb, const std::string& key) {
    ordered_json arr = ordered_json::array();
    for (const BoundReport& b : gb) {
      arr.push_back(bound_json(b));
      rep.csv_rows.push_back({std::to_string(b.gamma_index), num(b.value), b.branch, region_str(b.region), b.extremal});
    }
    rep.results[key] = arr;
  };

  if (spec.is_fc()) {
    rep.results["gamma_bounds"] = nullptr;
    rep.results["note"] = "no closed-form gamma bounds for F(c); use verify for the weighted series bound";
    return;
  }
  if (spec.is_janowski()) {
    const auto& p = spec.janowski_params();
    try {
      emit(janowski_gamma_bounds(p.a, p.b), "gamma_bounds");
    } catch (const CoverageError& e) {
      emit(*known_gamma_bounds(spec), "gamma_bounds");
      add_finding(rep, "coverage_gap", e.what());
    }
    return;
  }
  const Real alpha = spec.robertson_params().alpha;
  GammaBounds derived = robertson_gamma_bounds(alpha);
  emit(derived, "gamma_bounds");
  if (!a.printed) return;
  // The printed values, set against what the extremal omega = z attains.
  GammaBounds printed = robertson_gamma_bounds(alpha, Prefactor::printed);
  GammaVector g = log_coeffs(named_extremal(spec, "h2", 4), 3);
  ordered_json cmp = ordered_json::array();
  for (int k = 0; k < 3; ++k) {
    Real attained = abs(g(k + 1));
    bool sharp = abs(printed[k].value - attained) <= exp2i(-(working_bits() - 20));
    cmp.push_back({{"gamma", k + 1},
                   {"printed", num(printed[k].value)},
                   {"derived", num(derived[k].value)},
                   {"attained_by_h2", num(attained)},
                   {"printed_attained", sharp}});
    if (!sharp)
      add_finding(rep, "printed_bound_not_attained",
                  "gamma_" + std::to_string(k + 1) + ": printed " + num(printed[k].value) + " but the extremal gives " +
                      num(attained));
  }
  rep.results["printed_comparison"] = cmp;
}

struct RegionArgs {
  std::string mu;
  std::string nu;
};

void cmd_region(const RegionArgs& a, const RunConfig&, Report& rep) {
  Real mu = parse_real("--mu", a.mu), nu = parse_real("--nu", a.nu);
  Region r = ps_classify(mu, nu);
  Real bound = ps_bound_in(r, mu, nu);
  rep.results["mu"] = num(mu);
  rep.results["nu"] = num(nu);
  rep.results["region"] = std::string(region_name(r));
  rep.results["bound"] = num(bound);
  rep.csv_header = {"mu", "nu", "region", "bound"};
  rep.csv_rows.push_back({num(mu), num(nu), std::string(region_name(r)), num(bound)});
}

ProbeMode parse_mode(const std::string& m) {
  if (m == "on_circle" || m == "circle") return ProbeMode::on_circle;
  if (m == "radial") return ProbeMode::radial;
  throw UsageError("--mode must be on_circle or radial");
}

struct Table1Args {
  std::string mode = "on_circle";
};

void cmd_table1(const Table1Args& a, const RunConfig& cfg, Report& rep) {
  ProbeMode mode = parse_mode(a.mode);
  rep.csv_header = {"c", "eps", "theta_description", "re_psi", "bits"};
  std::map<std::pair<std::string, int>, BoundaryProbe> done;  // the repeated row is computed once
  ordered_json rows = ordered_json::array();
  for (const Table1Row& row : table1_rows()) {
    auto key = std::make_pair(std::string(row.c), row.k);
    auto it = done.find(key);
    const bool repeated = it != done.end();
    if (!repeated)
      it = done.emplace(key, re_Psi_boundary(Real::parse(row.c), pow(Real(10), Real(-row.k)), PrecisionContext{cfg.bits},
                                             mode)).first;
    const BoundaryProbe& p = it->second;
    std::string eps = "1e-" + std::to_string(row.k);
    std::string theta = "(2 - 10^-" + std::to_string(row.k) + ") pi";
    rep.csv_rows.push_back({row.c, eps, theta, num(p.re_psi_cap), std::to_string(p.bits_used)});
    bool sign_ok = (p.re_psi_cap.sign() < 0) == (row.published_re_psi < 0);
    rows.push_back({{"c", row.c},
                    {"eps", eps},
                    {"theta_description", theta},
                    {"re_psi", num(p.re_psi_cap)},
                    {"re_psi_check", num(p.re_psi_cap_check)},
                    {"bits", p.bits_used},
                    {"published_re_psi", row.published_re_psi},
                    {"sign_matches_published", sign_ok}});
    if (!sign_ok && !repeated) {
      char pub[32];
      std::snprintf(pub, sizeof pub, "%g", row.published_re_psi);
      add_finding(rep, "table_sign_mismatch",
                  "c=" + std::string(row.c) + ", eps=" + eps + ": Re Psi = " + p.re_psi_cap.str(12) + ", published " + pub);
    }
  }
  rep.results["mode"] = a.mode;
  rep.results["rows"] = rows;
}

struct ScanArgs {
  std::string c;
  std::vector<std::string> eps;
  std::string mode = "on_circle";
};

void cmd_scan(const ScanArgs& a, const RunConfig& cfg, Report& rep) {
  Real c = parse_real("--c", a.c);
  std::vector<Real> grid;
  for (const std::string& e : a.eps) grid.push_back(parse_real("--eps-list", e));
  ScanResult s = scan_theta(c, grid, PrecisionContext{cfg.bits}, Exec::parallel, parse_mode(a.mode));
  rep.csv_header = {"c", "eps", "re_psi", "bits", "error"};
  ordered_json pts = ordered_json::array();
  for (const ScanPoint& p : s.points) {
    if (p.probe) {
      pts.push_back({{"eps", num(p.eps)}, {"re_psi", num(p.probe->re_psi_cap)}, {"bits", p.probe->bits_used}});
      rep.csv_rows.push_back({num(c), num(p.eps), num(p.probe->re_psi_cap), std::to_string(p.probe->bits_used), ""});
    } else {
      pts.push_back({{"eps", num(p.eps)}, {"error", p.error}});
      rep.csv_rows.push_back({num(c), num(p.eps), "", "", p.error});
    }
  }
  rep.results["c"] = num(c);
  rep.results["mode"] = a.mode;
  rep.results["points"] = pts;
  rep.results["argmin"] = s.argmin ? ordered_json(*s.argmin) : ordered_json(nullptr);
  rep.results["min_re_psi"] = s.argmin ? ordered_json(num(s.points[*s.argmin].probe->re_psi_cap)) : ordered_json(nullptr);
}

struct VerifyArgs {
  std::string cls;
  std::vector<std::string> weights{"n2"};
  long samples = 1000;
};

void cmd_verify(const VerifyArgs& a, const RunConfig& cfg, Report& rep) {
  ClassSpec spec = parse_class(a.cls);
  rep.class_label = spec.label();
  std::vector<WeightSpec> weights;
  for (const std::string& w : a.weights) {
    try {
      weights.push_back(WeightSpec::parse(w));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (a.samples < 1) throw UsageError("--samples must be at least 1");
  MonteCarloReport r = monte_carlo_class(spec, a.samples, cfg.seed, cfg.order, weights);
  rep.results["samples"] = r.samples;
  ordered_json mg = ordered_json::array();
  for (int k = 0; k < 3; ++k)
    mg.push_back({{"gamma", k + 1}, {"max_abs", num(r.max_gamma[k])}, {"sample", r.argmax[k]}});
  rep.results["max_gamma"] = mg;
  if (r.bounds) {
    ordered_json b = ordered_json::array();
    for (const BoundReport& x : *r.bounds) b.push_back(bound_json(x));
    rep.results["gamma_bounds"] = b;
  } else {
    rep.results["gamma_bounds"] = nullptr;
  }
  rep.results["max_formula_deviation"] = r.max_formula_deviation ? ordered_json(num(*r.max_formula_deviation)) : ordered_json(nullptr);
  ordered_json ws = ordered_json::array();
  rep.csv_header = {"weight", "min_margin", "weight_ratio_non_increasing", "in_scope", "checks"};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    bool mono = weights[i].ratio_non_increasing(cfg.order);
    bool scope = weights[i].in_scope() && !spec.exploratory();
    ws.push_back({{"weight", weights[i].label()},
                  {"min_margin", num(r.min_margin[i])},
                  {"weight_ratio_non_increasing", mono},
                  {"in_scope", scope}});
    rep.csv_rows.push_back({weights[i].label(), num(r.min_margin[i]), mono ? "true" : "false", scope ? "true" : "false",
                            std::to_string(r.samples * cfg.order)});
  }
  rep.results["weights"] = ws;
  rep.results["inequality_checks"] = r.inequality_checks;
  ordered_json excess = ordered_json::array();
  for (const Finding& f : r.findings) {
    ordered_json j = {{"kind", f.kind}, {"detail", f.detail}, {"sample", f.index}, {"sample_seed", f.seed}, {"omega", f.omega}};
    if (f.kind == "exploratory_inequality_excess")
      excess.push_back(j);
    else
      rep.findings.push_back(j);
  }
  rep.results["exploratory_excess"] = excess;
  rep.results["errors"] = r.errors;
  if (!r.errors.empty()) throw Error(std::to_string(r.errors.size()) + " members could not be built; first: " + r.errors.front());
}

struct SharpnessArgs {
  std::string cls;
  int gamma = 3;
  long budget = 300;
  std::string mu;
  std::string nu;
};

void cmd_sharpness(const SharpnessArgs& a, const RunConfig&, Report& rep) {
  if (a.budget < 20) throw UsageError("--budget must be at least 20");
  SharpnessResult s;
  if (!a.mu.empty() || !a.nu.empty()) {
    if (a.mu.empty() || a.nu.empty() || !a.cls.empty()) throw UsageError("give either --class or both --mu and --nu");
    s = sharpness_search_functional(parse_real("--mu", a.mu), parse_real("--nu", a.nu), a.budget);
    rep.results["functional"] = "|c3 + mu c1 c2 + nu c1^3|";
  } else {
    ClassSpec spec = parse_class(a.cls);
    rep.class_label = spec.label();
    if (a.gamma < 1 || a.gamma > 3) throw UsageError("--gamma must be 1, 2 or 3");
    s = sharpness_search_gamma(spec, a.gamma, a.budget);
    rep.results["gamma"] = a.gamma;
  }
  rep.results["best"] = num(s.best);
  rep.results["omega"] = s.omega;
  rep.results["c"] = s.c;
  rep.results["s"] = s.s;
  rep.results["evaluations"] = s.evaluations;
  rep.results["bound"] = s.bound ? bound_json(*s.bound) : ordered_json(nullptr);
  rep.csv_header = {"best", "bound", "omega", "c", "s", "evaluations"};
  rep.csv_rows.push_back({num(s.best), s.bound ? num(s.bound->value) : "", s.omega, dbl(s.c),
                          std::to_string(s.s), std::to_string(s.evaluations)});
  if (s.bound && s.best > s.bound->value + verify_tolerance())
    add_finding(rep, "bound_exceeded", "search reached " + num(s.best) + " above the bound " + num(s.bound->value));
}

struct HyperArgs {
  std::string c;
};

void cmd_hyper(const HyperArgs& a, const RunConfig& cfg, Report& rep) {
  Real c = parse_real("--c", a.c);
  if (!(c > Real(0)) || !(c <= Real(3))) throw UsageError("--c must lie in (0, 3]");
  Real dev = hyper_ratio_identity_check(c, cfg.order);
  Real tol = exp2i(-(working_bits() - 24));
  bool pred = sugawa_predicate(c, Real(1), Real(2));
  rep.results["c"] = num(c);
  rep.results["max_deviation"] = num(dev);
  rep.results["tolerance"] = num(tol);
  rep.results["non_convexity_predicate"] = pred;
  rep.csv_header = {"c", "order", "max_deviation", "non_convexity_predicate"};
  rep.csv_rows.push_back({num(c), std::to_string(cfg.order), num(dev), pred ? "true" : "false"});
  if (dev > tol) add_finding(rep, "identity_deviation", "deviation " + num(dev) + " exceeds " + num(tol));
}

struct ChoArgs {
  std::string b = "-0.5";
};

void cmd_cho(const ChoArgs& a, const RunConfig&, Report& rep) {
  Real b = parse_real("--b", a.b);
  ChoRefutation r;
  try {
    r = refute_cho(b);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  rep.class_label = ClassSpec::janowski(Real(0), b).label();
  rep.csv_header = {"gamma", "claimed", "attained", "extremal", "violated"};
  ordered_json arr = ordered_json::array();
  for (int k = 0; k < 3; ++k) {
    std::string ext = "g" + std::to_string(k + 1);
    arr.push_back({{"gamma", k + 1},
                   {"claimed", num(r.claimed[k])},
                   {"attained", num(r.attained[k])},
                   {"extremal", ext},
                   {"violated", static_cast<bool>(r.violated[k])}});
    rep.csv_rows.push_back({std::to_string(k + 1), num(r.claimed[k]), num(r.attained[k]), ext,
                            r.violated[k] ? "true" : "false"});
    if (r.violated[k])
      add_finding(rep, "claimed_bound_violated",
                  "|gamma_" + std::to_string(k + 1) + "(" + ext + ")| = " + num(r.attained[k]) + " > claimed " +
                      num(r.claimed[k]));
  }
  rep.results["b"] = num(b);
  rep.results["comparison"] = arr;
}

// ---- output ---------------------------------------------------------------

std::string render(const Report& rep, const RunConfig& cfg, const std::string& command) {
  if (cfg.format == "csv") {
    std::string s;
    auto line = [&](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
      s += "\r\n";
    };
    line(rep.csv_header);
    for (const auto& r : rep.csv_rows) line(r);
    return s;
  }
  ordered_json meta;
  meta["tool"] = "logcoeff";
  meta["version"] = LOGCOEF_VERSION;
  meta["command"] = command;
  meta["bits"] = cfg.bits;
  meta["order"] = cfg.order;
  meta["seed"] = cfg.seed;
  meta["class"] = rep.class_label.empty() ? ordered_json(nullptr) : ordered_json(rep.class_label);
  ordered_json results = rep.results;
  results["findings"] = rep.findings;
  ordered_json doc;
  doc["meta"] = meta;
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "bits")
      cfg.bits = parse_long(key, val);
    else if (key == "order")
      cfg.order = static_cast<int>(parse_long(key, val));
    else if (key == "seed")
      cfg.seed = parse_u64(key, val);
    else if (key == "format") {
      check_format(val);
      cfg.format = val;
    } else if (key == "out")
      cfg.out_path = val;
    else
      throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic coefficients of classes of analytic functions", "logcoeff"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", LOGCOEF_VERSION);

  long bits_flag = 0;
  int order_flag = 0;
  std::uint64_t seed_flag = 0;
  std::string format_flag, out_flag, config_path;
  CLI::Option* bits_opt = app.add_option("--bits", bits_flag, "working precision in bits (>= 64)");
  CLI::Option* order_opt = app.add_option("--order", order_flag, "truncation order");
  CLI::Option* seed_opt = app.add_option("--seed", seed_flag, "random seed");
  CLI::Option* format_opt = app.add_option("--format", format_flag, "json or csv");
  CLI::Option* out_opt = app.add_option("--out", out_flag, "write the report to this file");
  app.add_option("--config", config_path, "key = value settings file");

  PsiArgs psi;
  auto* c_psi = app.add_subcommand("psi", "coefficients of the class's psi");
  c_psi->add_option("--class", psi.cls, "fc=<c>, janowski=<A>,<B> or robertson=<alpha>");
  c_psi->add_flag("--closed", psi.closed, "expand the closed form instead of the recurrence");

  GammaArgs gam;
  auto* c_gamma = app.add_subcommand("gamma", "logarithmic coefficients of a class member");
  c_gamma->add_option("--class", gam.cls, "class");
  c_gamma->add_option("--member", gam.member, "extremal, sample (from --seed), g1, g2, g3, g4 or h2");

  BoundsArgs bnd;
  auto* c_bounds = app.add_subcommand("bounds", "sharp bounds on |gamma_1..3|");
  c_bounds->add_option("--class", bnd.cls, "class");
  c_bounds->add_flag("--printed", bnd.printed, "compare with the printed Robertson bounds");

  RegionArgs reg;
  auto* c_region = app.add_subcommand("region", "region and bound for |c3 + mu c1 c2 + nu c1^3|");
  c_region->add_option("--mu", reg.mu)->required();
  c_region->add_option("--nu", reg.nu)->required();

  Table1Args t1;
  auto* c_table1 = app.add_subcommand("table1", "Re Psi at the published boundary points");
  c_table1->add_option("--mode", t1.mode, "on_circle or radial");

  ScanArgs sc;
  auto* c_scan = app.add_subcommand("scan", "Re Psi over a list of boundary offsets");
  c_scan->add_option("--c", sc.c)->required();
  c_scan->add_option("--eps-list", sc.eps, "offsets, theta = (2 - eps) pi")->delimiter(',')->required();
  c_scan->add_option("--mode", sc.mode, "on_circle or radial");

  VerifyArgs ver;
  auto* c_verify = app.add_subcommand("verify", "Monte Carlo check of the gamma bounds and weighted sums");
  c_verify->add_option("--class", ver.cls, "class");
  c_verify->add_option("--weight", ver.weights, "n2, t=<t>, roth or custom=<w1>,...; repeatable");
  c_verify->add_option("--samples", ver.samples, "number of Schwarz samples");

  SharpnessArgs sh;
  auto* c_sharp = app.add_subcommand("sharpness", "search for the maximizer of |gamma_k| or the functional");
  c_sharp->add_option("--class", sh.cls, "class");
  c_sharp->add_option("--gamma", sh.gamma, "1, 2 or 3");
  c_sharp->add_option("--budget", sh.budget, "objective evaluations");
  c_sharp->add_option("--mu", sh.mu, "functional mode");
  c_sharp->add_option("--nu", sh.nu, "functional mode");

  HyperArgs hy;
  auto* c_hyper = app.add_subcommand("hyper-check", "hypergeometric form of psi against the recurrence");
  c_hyper->add_option("--c", hy.c)->required();

  ChoArgs cho;
  auto* c_cho = app.add_subcommand("refute-cho", "claimed C(0,B) bounds against g1, g2, g3");
  c_cho->add_option("--b", cho.b, "B in [-0.99, 0)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw DomainError("cannot read config file " + config_path);
      std::stringstream ss;
      ss << f.rdbuf();
      apply_config_text(cfg, ss.str());
    }
    if (const char* env = std::getenv("LOGCOEFF_BITS")) cfg.bits = parse_long("LOGCOEFF_BITS", env);
    if (bits_opt->count()) cfg.bits = bits_flag;
    if (order_opt->count()) cfg.order = order_flag;
    if (seed_opt->count()) cfg.seed = seed_flag;
    if (format_opt->count()) cfg.format = format_flag;
    if (out_opt->count()) cfg.out_path = out_flag;
    if (!cfg.format.empty()) check_format(cfg.format);
    PrecisionContext::checked(cfg.bits);
    if (cfg.order < 1) throw DomainError("order must be at least 1");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  PrecisionGuard guard(PrecisionContext{cfg.bits});
  Report rep;
  std::string command;
  try {
    CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (cfg.format.empty()) cfg.format = sub == c_table1 ? "csv" : "json";
    if (sub == c_psi) cmd_psi(psi, cfg, rep);
    else if (sub == c_gamma) cmd_gamma(gam, cfg, rep);
    else if (sub == c_bounds) cmd_bounds(bnd, cfg, rep);
    else if (sub == c_region) cmd_region(reg, cfg, rep);
    else if (sub == c_table1) cmd_table1(t1, cfg, rep);
    else if (sub == c_scan) cmd_scan(sc, cfg, rep);
    else if (sub == c_verify) cmd_verify(ver, cfg, rep);
    else if (sub == c_sharp) cmd_sharpness(sh, cfg, rep);
    else if (sub == c_hyper) cmd_hyper(hy, cfg, rep);
    else if (sub == c_cho) cmd_cho(cho, cfg, rep);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return usage_error;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << "\n";
    return computation_error;
  }

  std::string text = render(rep, cfg, command);
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.out_path << "\n";
      return computation_error;
    }
    f << text;
  }
  for (const auto& f : rep.findings) err << "FINDING " << f["kind"].get<std::string>() << ": " << f["detail"].get<std::string>() << "\n";
  return rep.findings.empty() ? ok : finding;
}

}  // namespace logcoef::cli
