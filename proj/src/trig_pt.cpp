#include "ptnu/trig_pt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ptnu/error.hpp"
#include "ptnu/quadrature.hpp"
#include "ptnu/special_functions.hpp"

namespace ptnu::pt {

void PtPotential::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(m)) throw Error(ErrorKind::InvalidArgument, "mass must be > 0");
  if (!positive(v1) || !positive(v2)) throw Error(ErrorKind::InvalidArgument, "V1 and V2 must be > 0");
  if (!positive(alpha)) throw Error(ErrorKind::InvalidArgument, "alpha must be > 0");
}

double PtPotential::well_width() const { return std::numbers::pi / (2.0 * alpha); }

double potential_value(const PtPotential& p, double r) {
  p.validate();
  if (!(r > 0.0 && r < p.well_width())) {
    throw Error(ErrorKind::DomainError, "r = " + std::to_string(r) + " outside the principal well");
  }
  const double s = std::sin(p.alpha * r);
  const double c = std::cos(p.alpha * r);
  return p.v1 / (s * s) + p.v2 / (c * c);
}

nu::SpectralFamily to_nu_family(const PtPotential& p) {
  p.validate();
  const double inv = 1.0 / (4.0 * p.alpha * p.alpha);
  const double v1p = p.v1_prime();
  const double v2p = p.v2_prime();
  nu::SpectralFamily family;
  family.a1 = 0.5;
  family.a2 = 1.0;
  family.a3 = 1.0;
  family.xi_map = [inv, v1p, v2p](double eps) {
    return nu::XiTriple{eps * inv, (eps + v1p - v2p) * inv, v1p * inv};
  };
  family.eps_min = 0.0;
  return family;
}

double energy_closed_form(const PtPotential& p, int n) {
  p.validate();
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  const double a = p.alpha;
  const double a2 = a * a;
  const double m = p.m;
  const double q1 = std::sqrt(a2 + 8.0 * m * p.v1);
  const double q2 = std::sqrt(a2 + 8.0 * m * p.v2);
  const double half = n + 0.5;
  return 2.0 * a2 / m * half * half + a / (2.0 * m) * (2.0 * n + 1.0) * (q1 + q2) +
         (std::sqrt((a2 + 8.0 * m * p.v1) * (a2 + 8.0 * m * p.v2)) + a2) / (4.0 * m) + p.v1 + p.v2;
}

double alpha_zero_limit(const PtPotential& p) { return p.v1 + p.v2 + 2.0 * std::sqrt(p.v1 * p.v2); }

double energy_via_nu(const PtPotential& p, int n, double tol) {
  const nu::SpectralFamily family = to_nu_family(p);
  auto residual = [&](double eps) { return nu::quantization_residual(family.at(eps), n); };
  const double lo = 0.0;
  const bool lo_negative = residual(lo) < 0.0;
  double hi = std::max(1.0, 4.0 * p.m * alpha_zero_limit(p));
  for (int grow = 0; grow < 64 && (residual(hi) < 0.0) == lo_negative; ++grow) hi *= 2.0;
  const double eps = nu::solve_energy(family, n, nu::Branch::Principal, {lo, hi}, tol);
  return eps / (2.0 * p.m);
}

RadialWavefunction::RadialWavefunction(const PtPotential& p, int n, nu::EigenfunctionFactors factors,
                                       double log_amplitude)
    : potential_(p), n_(n), factors_(factors), log_amplitude_(log_amplitude) {
  p.validate();
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
}

double RadialWavefunction::log_envelope(double r) const {
  const long double ar = static_cast<long double>(potential_.alpha) * r;
  return static_cast<double>(2.0L * factors_.p1 * std::log(std::sin(ar)) +
                             2.0L * factors_.p2 * std::log(std::cos(ar)));
}

double RadialWavefunction::operator()(double r) const {
  if (!(r > 0.0 && r < potential_.well_width())) {
    throw Error(ErrorKind::DomainError, "r = " + std::to_string(r) + " outside the principal well");
  }
  const long double ar = static_cast<long double>(potential_.alpha) * r;
  const long double log_env = 2.0L * factors_.p1 * std::log(std::sin(ar)) +
                              2.0L * factors_.p2 * std::log(std::cos(ar));
  const long double poly = special::jacobi<long double>(n_, factors_.ja, factors_.jb, std::cos(2.0L * ar));
  return static_cast<double>(std::exp(log_amplitude_ + log_env) * poly);
}

RadialWavefunction RadialWavefunction::scaled(double log_factor) const {
  return RadialWavefunction(potential_, n_, factors_, log_amplitude_ + log_factor);
}

std::pair<double, double> RadialWavefunction::support(double cutoff) const {
  const double width = potential_.well_width();
  // envelope peak: s* = p1 / (p1 + p2) with s = sin^2(alpha r)
  const double s_peak = factors_.p1 / (factors_.p1 + factors_.p2);
  const double r_peak = std::asin(std::sqrt(s_peak)) / potential_.alpha;
  const double peak = log_envelope(r_peak);
  const double headroom = cutoff + n_ * std::log1p(std::max({factors_.ja, factors_.jb, 1.0}));
  const double level = peak - headroom;

  auto crossing = [&](double inside, double outside) {
    // log_envelope(inside) >= level, the outside end is the singular endpoint
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (inside + outside);
      if (mid == inside || mid == outside) break;
      if (log_envelope(mid) >= level) inside = mid;
      else outside = mid;
    }
    return outside;
  };
  return {crossing(r_peak, 0.0), crossing(r_peak, width)};
}

RadialWavefunction radial_wavefunction(const PtPotential& p, int n) {
  const nu::SpectralFamily family = to_nu_family(p);
  const double eps = 2.0 * p.m * energy_closed_form(p, n);
  const nu::NuDerived d = nu::derive_constants(family.at(eps));
  return RadialWavefunction(p, n, nu::eigenfunction_factors(d));
}

namespace {

constexpr int kNormPanels = 64;

special::IntegrationResult integrate_on(const std::function<double(double)>& f, std::pair<double, double> a,
                                        std::pair<double, double> b) {
  const double lo = std::min(a.first, b.first);
  const double hi = std::max(a.second, b.second);
  try {
    return special::integrate(f, lo, hi, kNormPanels, special::Grading::Both);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonFinite) throw Error(ErrorKind::QuadratureFailure, e.what());
    throw;
  }
}

}  // namespace

BoundState normalize(const PtPotential& p, const RadialWavefunction& raw) {
  const auto [lo, hi] = raw.support();
  const auto& f = raw.factors();
  const double s_peak = f.p1 / (f.p1 + f.p2);
  const double peak = raw.log_envelope(std::asin(std::sqrt(s_peak)) / p.alpha);
  // bring the envelope peak to 1 before squaring
  const double shift = -(raw.log_amplitude() + peak);
  const RadialWavefunction unit = raw.scaled(shift);
  const auto result = integrate_on([&unit](double r) { const double v = unit(r); return v * v; },
                                   {lo, hi}, {lo, hi});
  if (!(result.value > 0.0)) throw Error(ErrorKind::QuadratureFailure, "non-positive norm integral");

  BoundState state;
  state.n = raw.n();
  state.energy = energy_closed_form(p, raw.n());
  state.eps = 2.0 * p.m * state.energy;
  state.log_norm = shift - 0.5 * std::log(result.value);
  state.norm = std::exp(state.log_norm);
  return state;
}

BoundState normalize(const PtPotential& p, int n) { return normalize(p, radial_wavefunction(p, n)); }

double overlap(const RadialWavefunction& a, const RadialWavefunction& b) {
  return integrate_on([&](double r) { return a(r) * b(r); }, a.support(), b.support()).value;
}

namespace {

void check_table_args(const std::vector<double>& alphas, int n_max) {
  if (alphas.empty()) throw Error(ErrorKind::InvalidArgument, "alpha list must not be empty");
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 0");
}

}  // namespace

SpectrumTable spectrum_table(double m, double v1, double v2, const std::vector<double>& alphas,
                             int n_max) {
  check_table_args(alphas, n_max);
  for (double a : alphas) PtPotential{m, v1, v2, a}.validate();
  SpectrumTable table{alphas, n_max, std::vector<double>((n_max + 1) * alphas.size())};
  const int cols = static_cast<int>(alphas.size());
  const int cells = (n_max + 1) * cols;
#pragma omp parallel for schedule(static)
  for (int cell = 0; cell < cells; ++cell) {
    const int n = cell / cols;
    const int j = cell % cols;
    table.values[cell] = energy_closed_form(PtPotential{m, v1, v2, alphas[j]}, n);
  }
  return table;
}

SpectrumTable spectrum_table_serial(double m, double v1, double v2, const std::vector<double>& alphas,
                                    int n_max) {
  check_table_args(alphas, n_max);
  SpectrumTable table{alphas, n_max, {}};
  table.values.reserve((n_max + 1) * alphas.size());
  for (int n = 0; n <= n_max; ++n) {
    for (double a : alphas) table.values.push_back(energy_closed_form(PtPotential{m, v1, v2, a}, n));
  }
  return table;
}

}  // namespace ptnu::pt
