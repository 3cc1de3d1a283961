#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace logcoef::cli {

/// Settings shared by every subcommand. Built-ins, then the config file,
/// then LOGCOEFF_BITS, then command-line flags.
struct RunConfig {
  long bits = 256;
  int order = 128;
  std::uint64_t seed = 42;
  std::string format;           // json or csv; empty: the command's default (csv for table1)
  std::string out_path;         // empty: standard output
};

/// Applies `key = value` lines (# comments, blank lines ignored). Throws
/// DomainError on unknown keys or malformed values.
void apply_config_text(RunConfig& cfg, const std::string& text);

enum ExitCode { ok = 0, usage_error = 1, computation_error = 2, finding = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace logcoef::cli
