#pragma once

// Parametric Nikiforov-Uvarov solver.
//
// Works on equations of the form
//
//   psi'' + (a1 - a2 s) / (s (1 - a3 s)) psi'
//         + (-x1 s^2 + x2 s - x3) / (s (1 - a3 s))^2 psi = 0
//
// The six inputs determine the derived constants a4..a13, the quantization
// condition (whose roots give the spectrum) and the closed-form eigenfunction
// s^p1 (1 - a3 s)^p2 P_n^{(ja, jb)}(1 - 2 a3 s).

#include <functional>
#include <limits>
#include <utility>

namespace ptnu::nu {

struct NuCoefficients {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  /// Throws InvalidArgument unless all six are finite and a3 >= 0.
  void validate() const;
};

/// Which root k of the perfect-square condition is used. Principal is the
/// k = -(a7 + 2 a3 a8) - 2 sqrt(a8 a9) root; Secondary takes the + sign and
/// the starred constants.
enum class Branch { Principal, Secondary };

struct NuDerived {
  NuCoefficients input;
  double a4 = 0.0;
  double a5 = 0.0;
  double a6 = 0.0;
  double a7 = 0.0;
  double a8 = 0.0;
  double a9 = 0.0;
  // Under Branch::Secondary a10..a13 hold the starred variants.
  double a10 = 0.0;
  double a11 = 0.0;
  double a12 = 0.0;
  double a13 = 0.0;
  double k = 0.0;
  Branch branch = Branch::Principal;
};

NuDerived derive_constants(const NuCoefficients& c, Branch branch = Branch::Principal);

/// {k1, k2} = -(a7 + 2 a3 a8) +/- 2 sqrt(a8 a9). Throws NegativeDiscriminant
/// when a8 a9 < 0.
std::pair<double, double> k_values(const NuCoefficients& c);

/// Derivative of tau(s). Negative means the solution is physical; positive
/// values are reported, not rejected.
double tau_prime(const NuDerived& d);

inline bool is_physical(const NuDerived& d) { return tau_prime(d) < 0.0; }

/// Left-hand side of the quantization condition for level n; zero exactly on
/// the spectrum.
double quantization_residual(const NuCoefficients& c, int n, Branch branch = Branch::Principal);

struct XiTriple {
  double x1;
  double x2;
  double x3;
};

/// A one-parameter family of NU problems indexed by the spectral parameter
/// eps (for Schroedinger problems eps = 2mE). a1..a3 are eps-independent.
struct SpectralFamily {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  std::function<XiTriple(double)> xi_map;
  double eps_min = -std::numeric_limits<double>::infinity();
  double eps_max = std::numeric_limits<double>::infinity();

  /// Throws DomainError for eps outside [eps_min, eps_max].
  NuCoefficients at(double eps) const;
};

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr int kMaxIterations = 200;

/// Root of the quantization condition in eps inside `bracket`.
///
/// A residual that is affine in eps (checked at three points) is solved in a
/// single step. Otherwise a bracketed false-position/bisection hybrid runs.
/// Terminates when |residual| <= tol, or when the bracket has shrunk to a few
/// ulps of eps, in which case no representable eps does better.
///
/// Throws NoSignChange when the root is not inside the bracket and
/// NonConvergence after max_iter steps.
double solve_energy(const SpectralFamily& family, int n, Branch branch,
                    std::pair<double, double> bracket, double tol = kDefaultTolerance,
                    int max_iter = kMaxIterations);

struct EigenfunctionFactors {
  double p1;  // exponent of s
  double p2;  // exponent of (1 - a3 s)
  double ja;  // Jacobi index a
  double jb;  // Jacobi index b
};

/// Throws ZeroA3 when a3 == 0; use evaluate_eigenfunction_limit there.
EigenfunctionFactors eigenfunction_factors(const NuDerived& d);

/// Unnormalized psi(s) for 0 < s < 1/a3.
double evaluate_eigenfunction(const NuDerived& d, int n, double s);

/// a3 == 0 form: s^a12 exp(a13 s) L_n^{a10 - 1}(a11 s), s > 0.
double evaluate_eigenfunction_limit(const NuDerived& d, int n, double s);

}  // namespace ptnu::nu
