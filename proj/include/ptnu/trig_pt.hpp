#pragma once

// Trigonometric Poeschl-Teller well
//
//   V(r) = V1 / sin^2(alpha r) + V2 / cos^2(alpha r),   0 < r < pi / (2 alpha)
//
// in natural units (hbar = c = 1, energies and masses in fm^-1). The s-wave
// radial equation R'' + (eps - V1'/sin^2 - V2'/cos^2) R = 0 with eps = 2mE and
// V' = 2mV maps onto the NU template through s = sin^2(alpha r).

#include <vector>

#include "ptnu/nu_engine.hpp"

namespace ptnu::pt {

struct PtPotential {
  double m = 10.0;
  double v1 = 5.0;
  double v2 = 3.0;
  double alpha = 1.2;

  /// Throws InvalidArgument unless m, v1, v2, alpha are finite and > 0.
  void validate() const;

  double v1_prime() const { return 2.0 * m * v1; }
  double v2_prime() const { return 2.0 * m * v2; }
  /// Right end of the principal well, pi / (2 alpha).
  double well_width() const;
};

struct BoundState {
  int n = 0;
  double energy = 0.0;  // E_{n,0}, fm^-1
  double eps = 0.0;     // 2 m E, fm^-2
  /// Scale giving the raw wavefunction unit L2 norm on the well. May overflow
  /// for very small alpha; log_norm is always finite.
  double norm = 1.0;
  double log_norm = 0.0;
};

/// Throws DomainError unless 0 < r < pi/(2 alpha).
double potential_value(const PtPotential& p, double r);

/// a1 = 1/2, a2 = 1, a3 = 1; xi(eps) = (eps, eps + V1' - V2', V1') / (4 alpha^2).
/// Domain eps >= 0.
nu::SpectralFamily to_nu_family(const PtPotential& p);

double energy_closed_form(const PtPotential& p, int n);

/// V1 + V2 + 2 sqrt(V1 V2); alpha is ignored.
double alpha_zero_limit(const PtPotential& p);

/// Energy from a root of the NU quantization condition.
double energy_via_nu(const PtPotential& p, int n, double tol = nu::kDefaultTolerance);

/// R_{n,0}(r) assembled from the NU eigenfunction with s = sin^2(alpha r):
///
///   amplitude * sin(alpha r)^{2 p1} cos(alpha r)^{2 p2} P_n^{(ja, jb)}(cos 2 alpha r)
///
/// Evaluated in log space and long double so that large exponents (small
/// alpha) neither overflow nor lose the digits needed for second differences.
class RadialWavefunction {
 public:
  RadialWavefunction(const PtPotential& p, int n, nu::EigenfunctionFactors factors,
                     double log_amplitude = 0.0);

  /// Throws DomainError outside (0, pi/(2 alpha)).
  double operator()(double r) const;
  /// log of the two power factors (no polynomial, no amplitude).
  double log_envelope(double r) const;

  int n() const { return n_; }
  const PtPotential& potential() const { return potential_; }
  const nu::EigenfunctionFactors& factors() const { return factors_; }
  double log_amplitude() const { return log_amplitude_; }

  /// Copy with the amplitude multiplied by exp(log_factor).
  RadialWavefunction scaled(double log_factor) const;
  RadialWavefunction normalized(const BoundState& state) const { return scaled(state.log_norm); }

  /// Interval outside of which |R| is below exp(-cutoff) of its envelope peak
  /// (with headroom for the polynomial). Used to keep quadrature on the
  /// support for sharply peaked states.
  std::pair<double, double> support(double cutoff = 40.0) const;

 private:
  PtPotential potential_;
  int n_;
  nu::EigenfunctionFactors factors_;
  double log_amplitude_;
};

RadialWavefunction radial_wavefunction(const PtPotential& p, int n);

/// Fixes the norm so that the integral of R^2 over the well is 1.
BoundState normalize(const PtPotential& p, int n);
BoundState normalize(const PtPotential& p, const RadialWavefunction& raw);

/// Integral of R_a R_b over the well (both already carry their amplitudes).
double overlap(const RadialWavefunction& a, const RadialWavefunction& b);

struct SpectrumTable {
  std::vector<double> alphas;
  int n_max = 0;
  std::vector<double> values;  // row-major, values[n * alphas.size() + j]

  double at(int n, std::size_t j) const { return values[static_cast<std::size_t>(n) * alphas.size() + j]; }
};

/// Closed-form energies for n = 0..n_max and every alpha (OpenMP over cells).
SpectrumTable spectrum_table(double m, double v1, double v2, const std::vector<double>& alphas,
                             int n_max);
SpectrumTable spectrum_table_serial(double m, double v1, double v2, const std::vector<double>& alphas,
                                    int n_max);

}  // namespace ptnu::pt
