#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptnu::cli {

enum class Format { Csv, Tsv, Json };

struct RunConfig {
  double m = 10.0;
  double v1 = 5.0;
  double v2 = 3.0;
  std::vector<double> alphas{1.2, 0.8, 0.4, 0.2, 0.02, 0.002};
  int n_max = 6;
  int grid_points = 8000;
  /// Relative band for the oracle route in `verify`. The NU route uses
  /// min(tol, kNuBand).
  double tol = 1e-4;
  Format format = Format::Csv;
  int precision = 8;

  /// Empty string when valid, otherwise the first problem found.
  std::string validate() const;
};

inline constexpr double kNuBand = 1e-9;
/// Oracle rows are computed only for alpha at or above this value.
inline constexpr double kOracleMinAlpha = 0.4;

/// Reads `key = value` lines (`#` starts a comment) into cfg. Keys match the
/// long flag names: m, v1, v2, alpha, nmax, grid-points, tol, format,
/// precision. Throws ptnu::Error(InvalidArgument) on unknown keys or bad values.
void apply_config_file(const std::string& path, RunConfig& cfg);

/// Decimal text with `precision` digits after the point, round-half-even.
std::string format_fixed(double value, int precision);

int cmd_table2(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_wavefunction(const RunConfig& cfg, int n, int points, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_limit(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point (subcommand + flags). Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptnu::cli
