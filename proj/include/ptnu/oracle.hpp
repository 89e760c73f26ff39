#pragma once

// Finite-difference check of the s-wave spectrum that shares nothing with the
// NU path: three-point discretization of
//
//   -R'' + (V1'/sin^2(alpha r) + V2'/cos^2(alpha r)) R = eps R
//
// with Dirichlet ends, eigenvalues by Sturm-count bisection, and Richardson
// extrapolation in the step size.

#include <functional>
#include <vector>

#include "ptnu/trig_pt.hpp"

namespace ptnu::oracle {

/// Symmetric tridiagonal -d^2/dr^2 + V'(r) on the interior grid r_i = i h,
/// i = 1..n_points, h = length / (n_points + 1).
struct RadialOperator {
  int n_points = 0;
  double h = 0.0;
  std::vector<double> diag;
  double offdiag = 0.0;
  double length = 0.0;

  double grid(int i) const { return (i + 1) * h; }  // 0-based row -> r
};

inline constexpr int kMinGridPoints = 100;

/// Throws GridTooSmall for n_points < kMinGridPoints.
RadialOperator discretize(const pt::PtPotential& p, int n_points);
/// Same stencil for an arbitrary scaled potential V'(r) on (0, length).
RadialOperator discretize(const std::function<double(double)>& scaled_potential, double length,
                          int n_points);

/// Number of eigenvalues strictly below x.
int sturm_count(const RadialOperator& op, double x);

/// The `count` smallest eigenvalues, ascending. Each is an independent
/// bisection on the Sturm count, run in parallel over the index; results do
/// not depend on the thread schedule.
std::vector<double> lowest_eigenvalues(const RadialOperator& op, int count);
/// Serial reference for lowest_eigenvalues (same bisection, one index at a time).
std::vector<double> lowest_eigenvalues_serial(const RadialOperator& op, int count);

/// Unit eigenvector for a computed eigenvalue, by inverse iteration.
std::vector<double> eigenvector(const RadialOperator& op, double eigenvalue);

/// Richardson combination for a scheme of the given order with step halving.
double richardson(double e_h, double e_h2, int order = 2);

struct ConvergedEigenvalue {
  double eps_h = 0.0;
  double eps_h2 = 0.0;
  double extrapolated = 0.0;
  /// log2 of successive differences over h, h/2, h/4.
  double order_estimate = 0.0;
};

/// Eigenvalues on grids with step h, h/2 and h/4 (n_points, 2 n_points + 1,
/// 4 n_points + 3 interior points), Richardson-extrapolated from the first two.
std::vector<ConvergedEigenvalue> converged_eigenvalues(const pt::PtPotential& p, int n_points,
                                                       int count);

/// max over samples of |R'' + (eps - V'(r)) R| / max|R|, with R'' from the
/// five-point centered stencil at step 1e-4 * pi/(2 alpha). Samples must lie
/// in (delta, L - delta), delta = 1e-3 * L. Throws NonFinite when max|R| = 0
/// or a value is not finite.
double ode_residual(const std::function<double(double)>& wavefunction, const pt::PtPotential& p,
                    double energy, const std::vector<double>& samples);

}  // namespace ptnu::oracle
