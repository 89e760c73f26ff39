#include "ptnu/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ptnu/error.hpp"
#include "ptnu/oracle.hpp"
#include "ptnu/trig_pt.hpp"

namespace ptnu::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::InvalidArgument, "bad number for " + key + ": '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::InvalidArgument, "bad integer for " + key + ": '" + text + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  return out;
}

std::optional<Format> parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "tsv") return Format::Tsv;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_sci(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", precision, value);
  return buf;
}

// Value as printed, for json output that matches the text formats.
double as_printed(double value, int precision) { return std::stod(format_fixed(value, precision)); }
double as_printed_sci(double value, int precision) { return std::stod(format_sci(value, precision)); }

char separator(Format f) { return f == Format::Tsv ? '\t' : ','; }

void write_row(std::ostream& out, Format f, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << separator(f);
    out << cells[i];
  }
  out << '\n';
}

int invalid(std::ostream& err, const std::string& what) {
  err << "ptnu: invalid configuration: " << what << '\n';
  return 2;
}

}  // namespace

std::string RunConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(m)) return "m must be > 0";
  if (!positive(v1)) return "v1 must be > 0";
  if (!positive(v2)) return "v2 must be > 0";
  if (alphas.empty()) return "alpha list is empty";
  for (double a : alphas) {
    if (!positive(a)) return "every alpha must be > 0";
  }
  if (n_max < 0) return "nmax must be >= 0";
  if (grid_points < oracle::kMinGridPoints) return "grid-points must be >= 100";
  if (!positive(tol)) return "tol must be > 0";
  if (precision < 1 || precision > 17) return "precision must be in [1, 17]";
  return {};
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "m") cfg.m = parse_double(key, value);
    else if (key == "v1") cfg.v1 = parse_double(key, value);
    else if (key == "v2") cfg.v2 = parse_double(key, value);
    else if (key == "alpha") cfg.alphas = parse_list(key, value);
    else if (key == "nmax") cfg.n_max = parse_int(key, value);
    else if (key == "grid-points") cfg.grid_points = parse_int(key, value);
    else if (key == "tol") cfg.tol = parse_double(key, value);
    else if (key == "precision") cfg.precision = parse_int(key, value);
    else if (key == "format") {
      const auto f = parse_format(value);
      if (!f) throw Error(ErrorKind::InvalidArgument, "unknown format '" + value + "'");
      cfg.format = *f;
    } else {
      throw Error(ErrorKind::InvalidArgument, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

std::string format_fixed(double value, int precision) {
  // glibc printf rounds the exact binary value to nearest, ties to even
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

int cmd_table2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (const auto why = cfg.validate(); !why.empty()) return invalid(err, why);
  const auto table = pt::spectrum_table(cfg.m, cfg.v1, cfg.v2, cfg.alphas, cfg.n_max);
  if (cfg.format == Format::Json) {
    auto rows = nlohmann::json::array();
    for (int n = 0; n <= cfg.n_max; ++n) {
      for (std::size_t j = 0; j < cfg.alphas.size(); ++j) {
        rows.push_back({{"n", n}, {"alpha", cfg.alphas[j]}, {"energy", as_printed(table.at(n, j), cfg.precision)}});
      }
    }
    out << rows.dump(2) << '\n';
    return 0;
  }
  std::vector<std::string> header{"n"};
  for (double a : cfg.alphas) header.push_back("alpha=" + shortest(a));
  write_row(out, cfg.format, header);
  for (int n = 0; n <= cfg.n_max; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (std::size_t j = 0; j < cfg.alphas.size(); ++j) row.push_back(format_fixed(table.at(n, j), cfg.precision));
    write_row(out, cfg.format, row);
  }
  return 0;
}

int cmd_wavefunction(const RunConfig& cfg, int n, int points, std::ostream& out, std::ostream& err) {
  if (const auto why = cfg.validate(); !why.empty()) return invalid(err, why);
  if (n < 0 || n > cfg.n_max) return invalid(err, "n must be in [0, nmax]");
  if (points < 2) return invalid(err, "points must be >= 2");
  const pt::PtPotential p{cfg.m, cfg.v1, cfg.v2, cfg.alphas.front()};
  const auto raw = pt::radial_wavefunction(p, n);
  const auto wf = raw.normalized(pt::normalize(p, raw));
  const double width = p.well_width();

  auto rows = nlohmann::json::array();
  if (cfg.format != Format::Json) write_row(out, cfg.format, {"r", "R", "R_over_r"});
  for (int i = 0; i < points; ++i) {
    const double r = width * (i + 1) / (points + 1);
    const double value = wf(r);
    if (cfg.format == Format::Json) {
      rows.push_back({{"r", as_printed(r, cfg.precision)},
                      {"R", as_printed_sci(value, cfg.precision)},
                      {"R_over_r", as_printed_sci(value / r, cfg.precision)}});
    } else {
      write_row(out, cfg.format,
                {format_fixed(r, cfg.precision), format_sci(value, cfg.precision), format_sci(value / r, cfg.precision)});
    }
  }
  if (cfg.format == Format::Json) out << rows.dump(2) << '\n';
  return 0;
}

namespace {

struct VerifyCell {
  int n = 0;
  double alpha = 0.0;
  double closed = 0.0;
  double nu = 0.0;
  std::optional<double> oracle;
  double nu_dev = 0.0;
  std::optional<double> oracle_dev;
  bool ok = true;
};

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (const auto why = cfg.validate(); !why.empty()) return invalid(err, why);
  if (cfg.grid_points < 1000) return invalid(err, "verify needs grid-points >= 1000");
  const double nu_band = std::min(cfg.tol, kNuBand);
  const double oracle_band = cfg.tol;
  const int rows_per_alpha = cfg.n_max + 1;
  const int cells = rows_per_alpha * static_cast<int>(cfg.alphas.size());
  std::vector<VerifyCell> report(cells);

  // Closed form and NU root for every cell; cells are independent.
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < cells; ++c) {
    auto& cell = report[c];
    cell.alpha = cfg.alphas[c / rows_per_alpha];
    cell.n = c % rows_per_alpha;
    const pt::PtPotential p{cfg.m, cfg.v1, cfg.v2, cell.alpha};
    cell.closed = pt::energy_closed_form(p, cell.n);
    cell.nu = pt::energy_via_nu(p, cell.n);
    cell.nu_dev = std::abs(cell.nu - cell.closed) / std::abs(cell.closed);
  }
  // The oracle sweep parallelizes internally over eigenvalue index.
  for (std::size_t j = 0; j < cfg.alphas.size(); ++j) {
    if (cfg.alphas[j] < kOracleMinAlpha) continue;
    const pt::PtPotential p{cfg.m, cfg.v1, cfg.v2, cfg.alphas[j]};
    const auto eig = oracle::converged_eigenvalues(p, cfg.grid_points, rows_per_alpha);
    for (int n = 0; n < rows_per_alpha; ++n) {
      auto& cell = report[j * rows_per_alpha + n];
      cell.oracle = eig[n].extrapolated / (2.0 * cfg.m);
      cell.oracle_dev = std::abs(*cell.oracle - cell.closed) / std::abs(cell.closed);
    }
  }

  int violations = 0;
  for (auto& cell : report) {
    cell.ok = cell.nu_dev <= nu_band && (!cell.oracle_dev || *cell.oracle_dev <= oracle_band);
    if (!cell.ok) ++violations;
  }

  const int prec = cfg.precision;
  if (cfg.format == Format::Json) {
    auto rows = nlohmann::json::array();
    for (const auto& cell : report) {
      nlohmann::json row{{"n", cell.n},
                         {"alpha", cell.alpha},
                         {"closed_form", as_printed(cell.closed, prec)},
                         {"nu", as_printed(cell.nu, prec)},
                         {"nu_rel_dev", as_printed_sci(cell.nu_dev, 3)},
                         {"status", cell.ok ? "ok" : "FAIL"}};
      if (cell.oracle) {
        row["oracle"] = as_printed(*cell.oracle, prec);
        row["oracle_rel_dev"] = as_printed_sci(*cell.oracle_dev, 3);
      } else {
        row["oracle"] = "skipped";
        row["oracle_rel_dev"] = "skipped";
      }
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
  } else {
    write_row(out, cfg.format, {"n", "alpha", "closed_form", "nu", "oracle", "nu_rel_dev", "oracle_rel_dev", "status"});
    for (const auto& cell : report) {
      write_row(out, cfg.format,
                {std::to_string(cell.n), shortest(cell.alpha), format_fixed(cell.closed, prec),
                 format_fixed(cell.nu, prec), cell.oracle ? format_fixed(*cell.oracle, prec) : "skipped",
                 format_sci(cell.nu_dev, 3), cell.oracle_dev ? format_sci(*cell.oracle_dev, 3) : "skipped",
                 cell.ok ? "ok" : "FAIL"});
    }
  }
  if (violations > 0) {
    err << "ptnu verify: " << violations << " cell(s) outside the bands (nu <= " << format_sci(nu_band, 1)
        << ", oracle <= " << format_sci(oracle_band, 1) << ")\n";
    return 1;
  }
  return 0;
}

int cmd_limit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (const auto why = cfg.validate(); !why.empty()) return invalid(err, why);
  const pt::PtPotential base{cfg.m, cfg.v1, cfg.v2, cfg.alphas.front()};
  const double limit = pt::alpha_zero_limit(base);
  const int prec = cfg.precision;
  auto rows = nlohmann::json::array();
  if (cfg.format != Format::Json) write_row(out, cfg.format, {"alpha", "energy", "limit", "deviation"});
  for (double a : cfg.alphas) {
    const double e = pt::energy_closed_form(pt::PtPotential{cfg.m, cfg.v1, cfg.v2, a}, 0);
    const double dev = std::abs(e - limit);
    if (cfg.format == Format::Json) {
      rows.push_back({{"alpha", a},
                      {"energy", as_printed(e, prec)},
                      {"limit", as_printed(limit, prec)},
                      {"deviation", as_printed(dev, prec)}});
    } else {
      write_row(out, cfg.format, {shortest(a), format_fixed(e, prec), format_fixed(limit, prec), format_fixed(dev, prec)});
    }
  }
  if (cfg.format == Format::Json) out << rows.dump(2) << '\n';
  return 0;
}

namespace {

// Flags shared by every subcommand. Values land in `opts`; anything given on
// the command line overrides the config file.
struct SharedFlags {
  double m = 0, v1 = 0, v2 = 0, tol = 0;
  std::vector<double> alphas;
  int n_max = 0, grid_points = 0, precision = 0;
  std::string format;
  std::string config;
  CLI::Option *o_m{}, *o_v1{}, *o_v2{}, *o_alpha{}, *o_nmax{}, *o_grid{}, *o_tol{}, *o_format{}, *o_precision{};

  void attach(CLI::App& app) {
    o_m = app.add_option("--m", m, "Mass, fm^-1 (default 10)");
    o_v1 = app.add_option("--v1", v1, "V1, fm^-1 (default 5)");
    o_v2 = app.add_option("--v2", v2, "V2, fm^-1 (default 3)");
    o_alpha = app.add_option("--alpha", alphas, "Comma-separated alpha list, fm^-1")->delimiter(',');
    o_nmax = app.add_option("--nmax", n_max, "Highest radial quantum number (default 6)");
    o_grid = app.add_option("--grid-points", grid_points, "Finite-difference interior points (default 8000)");
    o_tol = app.add_option("--tol", tol, "Oracle relative band for verify; the NU band is min(tol, 1e-9) (default 1e-4)");
    o_format = app.add_option("--format", format, "csv, tsv or json");
    o_precision = app.add_option("--precision", precision, "Decimal digits, 1..17 (default 8)");
    app.add_option("--config", config, "key=value config file");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config.empty()) apply_config_file(config, cfg);
    if (o_m->count()) cfg.m = m;
    if (o_v1->count()) cfg.v1 = v1;
    if (o_v2->count()) cfg.v2 = v2;
    if (o_alpha->count()) cfg.alphas = alphas;
    if (o_nmax->count()) cfg.n_max = n_max;
    if (o_grid->count()) cfg.grid_points = grid_points;
    if (o_tol->count()) cfg.tol = tol;
    if (o_precision->count()) cfg.precision = precision;
    if (o_format->count()) {
      const auto f = parse_format(format);
      if (!f) throw Error(ErrorKind::InvalidArgument, "unknown format '" + format + "'");
      cfg.format = *f;
    }
    return cfg;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poeschl-Teller s-wave spectra via the parametric Nikiforov-Uvarov method", "ptnu"};
  app.require_subcommand(1);

  auto* table2 = app.add_subcommand("table2", "Energy table E_{n,0} over n and alpha");
  auto* wave = app.add_subcommand("wavefunction", "Normalized radial wavefunction samples (first alpha)");
  auto* verify = app.add_subcommand("verify", "Closed form vs NU root vs finite-difference oracle");
  auto* limit = app.add_subcommand("limit", "Ground-state energy against the alpha -> 0 limit");

  SharedFlags f_table2, f_wave, f_verify, f_limit;
  f_table2.attach(*table2);
  f_wave.attach(*wave);
  f_verify.attach(*verify);
  f_limit.attach(*limit);
  int wave_n = 0;
  int wave_points = 200;
  wave->add_option("--n", wave_n, "Radial quantum number");
  wave->add_option("--points", wave_points, "Number of samples (default 200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ptnu: " << e.what() << '\n';
    return 2;
  }

  try {
    if (table2->parsed()) return cmd_table2(f_table2.resolve(), out, err);
    if (wave->parsed()) return cmd_wavefunction(f_wave.resolve(), wave_n, wave_points, out, err);
    if (verify->parsed()) return cmd_verify(f_verify.resolve(), out, err);
    if (limit->parsed()) return cmd_limit(f_limit.resolve(), out, err);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) return invalid(err, e.what());
    err << "ptnu: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ptnu::cli
