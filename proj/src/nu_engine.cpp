#include "ptnu/nu_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptnu/error.hpp"
#include "ptnu/special_functions.hpp"

namespace ptnu::nu {

void NuCoefficients::validate() const {
  for (double v : {a1, a2, a3, x1, x2, x3}) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "NU coefficients must be finite");
  }
  if (a3 < 0.0) throw Error(ErrorKind::InvalidArgument, "NU coefficient a3 must be >= 0");
}

NuDerived derive_constants(const NuCoefficients& c, Branch branch) {
  c.validate();
  NuDerived d;
  d.input = c;
  d.branch = branch;
  d.a4 = 0.5 * (1.0 - c.a1);
  d.a5 = 0.5 * (c.a2 - 2.0 * c.a3);
  d.a6 = d.a5 * d.a5 + c.x1;
  d.a7 = 2.0 * d.a4 * d.a5 - c.x2;
  d.a8 = d.a4 * d.a4 + c.x3;
  d.a9 = c.a3 * d.a7 + c.a3 * c.a3 * d.a8 + d.a6;
  if (d.a8 < 0.0 || d.a9 < 0.0) {
    throw Error(ErrorKind::NegativeDiscriminant,
                "a8 = " + std::to_string(d.a8) + ", a9 = " + std::to_string(d.a9));
  }
  const double r8 = std::sqrt(d.a8);
  const double r9 = std::sqrt(d.a9);
  const double k_shift = -(d.a7 + 2.0 * c.a3 * d.a8);
  if (branch == Branch::Principal) {
    d.a10 = c.a1 + 2.0 * d.a4 + 2.0 * r8;
    d.a11 = c.a2 - 2.0 * d.a5 + 2.0 * (r9 + c.a3 * r8);
    d.a12 = d.a4 + r8;
    d.a13 = d.a5 - (r9 + c.a3 * r8);
    d.k = k_shift - 2.0 * std::sqrt(d.a8 * d.a9);
  } else {
    d.a10 = c.a1 + 2.0 * d.a4 - 2.0 * r8;
    d.a11 = c.a2 - 2.0 * d.a5 + 2.0 * (r9 - c.a3 * r8);
    d.a12 = d.a4 - r8;
    d.a13 = d.a5 - (r9 - c.a3 * r8);
    d.k = k_shift + 2.0 * std::sqrt(d.a8 * d.a9);
  }
  return d;
}

std::pair<double, double> k_values(const NuCoefficients& c) {
  c.validate();
  const double a4 = 0.5 * (1.0 - c.a1);
  const double a5 = 0.5 * (c.a2 - 2.0 * c.a3);
  const double a6 = a5 * a5 + c.x1;
  const double a7 = 2.0 * a4 * a5 - c.x2;
  const double a8 = a4 * a4 + c.x3;
  const double a9 = c.a3 * a7 + c.a3 * c.a3 * a8 + a6;
  if (a8 * a9 < 0.0) {
    throw Error(ErrorKind::NegativeDiscriminant, "a8 * a9 < 0 in k_values");
  }
  const double shift = -(a7 + 2.0 * c.a3 * a8);
  const double root = 2.0 * std::sqrt(a8 * a9);
  return {shift + root, shift - root};
}

double tau_prime(const NuDerived& d) {
  const double a3 = d.input.a3;
  const double r8 = std::sqrt(d.a8);
  const double r9 = std::sqrt(d.a9);
  const double mix = d.branch == Branch::Principal ? r9 + a3 * r8 : r9 - a3 * r8;
  return -2.0 * a3 - 2.0 * mix;
}

double quantization_residual(const NuCoefficients& c, int n, Branch branch) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "quantum number must be >= 0");
  const NuDerived d = derive_constants(c, branch);
  const double a3 = c.a3;
  const double r8 = std::sqrt(d.a8);
  const double r9 = std::sqrt(d.a9);
  const double nn = static_cast<double>(n);
  const double common = c.a2 * nn - (2.0 * nn + 1.0) * d.a5 + nn * (nn - 1.0) * a3 + d.a7 +
                        2.0 * a3 * d.a8;
  if (branch == Branch::Principal) {
    return common + (2.0 * nn + 1.0) * (r9 + a3 * r8) + 2.0 * std::sqrt(d.a8 * d.a9);
  }
  return common + (2.0 * nn + 1.0) * (r9 - a3 * r8) - 2.0 * std::sqrt(d.a8 * d.a9);
}

NuCoefficients SpectralFamily::at(double eps) const {
  if (!(eps >= eps_min && eps <= eps_max)) {
    throw Error(ErrorKind::DomainError, "eps = " + std::to_string(eps) + " outside family domain");
  }
  const XiTriple xi = xi_map(eps);
  return {a1, a2, a3, xi.x1, xi.x2, xi.x3};
}

namespace {

bool bracket_collapsed(double a, double b) {
  const double mag = std::max(std::abs(a), std::abs(b));
  const double ulp = std::nextafter(mag, std::numeric_limits<double>::infinity()) - mag;
  return b - a <= 4.0 * ulp;
}

}  // namespace

double solve_energy(const SpectralFamily& family, int n, Branch branch,
                    std::pair<double, double> bracket, double tol, int max_iter) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be > 0");
  auto [lo, hi] = bracket;
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw Error(ErrorKind::InvalidArgument, "bracket must be finite with lo < hi");
  }
  auto residual = [&](double eps) { return quantization_residual(family.at(eps), n, branch); };

  double f_lo = residual(lo);
  double f_hi = residual(hi);
  if (std::abs(f_lo) <= tol) return lo;
  if (std::abs(f_hi) <= tol) return hi;

  const double mid = 0.5 * (lo + hi);
  const double f_mid = residual(mid);
  const double scale = std::max({std::abs(f_lo), std::abs(f_hi), std::abs(f_mid)});
  const bool affine = std::abs(f_mid - 0.5 * (f_lo + f_hi)) <= 1e-10 * scale;

  if (affine) {
    const double slope = (f_hi - f_lo) / (hi - lo);
    const double root = slope != 0.0 ? lo - f_lo / slope : lo - 1.0;
    if (!(root >= lo && root <= hi)) {
      throw Error(ErrorKind::NoSignChange, "affine residual has no root in [" + std::to_string(lo) +
                                               ", " + std::to_string(hi) + "]");
    }
    const double f_root = residual(root);
    if (std::abs(f_root) <= tol) return root;
    // tighten the bracket around the one-step root and finish below
    if ((f_root < 0.0) == (f_lo < 0.0)) {
      lo = root;
      f_lo = f_root;
    } else {
      hi = root;
      f_hi = f_root;
    }
  }

  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw Error(ErrorKind::NoSignChange, "residual has the same sign at both ends of [" +
                                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  double a = lo, fa = f_lo;
  double b = hi, fb = f_hi;
  double best = std::abs(fa) < std::abs(fb) ? a : b;
  double f_best = std::min(std::abs(fa), std::abs(fb));
  int retained = 0;  // +1: a kept last step, -1: b kept
  for (int iter = 0; iter < max_iter; ++iter) {
    double x = b - fb * (b - a) / (fb - fa);
    if (!(x > a && x < b)) x = 0.5 * (a + b);
    const double width = b - a;
    const double fx = residual(x);
    if (std::abs(fx) < f_best) {
      best = x;
      f_best = std::abs(fx);
    }
    if (f_best <= tol) return best;
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
      if (retained == -1) fb *= 0.5;  // Illinois step
      retained = -1;
    } else {
      b = x;
      fb = fx;
      if (retained == 1) fa *= 0.5;
      retained = 1;
    }
    if (bracket_collapsed(a, b)) return best;
    // stalled false position: force a bisection
    if (b - a > 0.5 * width) {
      const double m = 0.5 * (a + b);
      const double fm = residual(m);
      if (std::abs(fm) < f_best) {
        best = m;
        f_best = std::abs(fm);
      }
      if (f_best <= tol) return best;
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
        fb = fm;
      }
      retained = 0;
      if (bracket_collapsed(a, b)) return best;
    }
  }
  throw Error(ErrorKind::NonConvergence,
              "solve_energy did not converge in " + std::to_string(max_iter) + " iterations");
}

EigenfunctionFactors eigenfunction_factors(const NuDerived& d) {
  const double a3 = d.input.a3;
  if (a3 == 0.0) throw Error(ErrorKind::ZeroA3, "a3 = 0 requires the Laguerre limit form");
  return {d.a12, -d.a12 - d.a13 / a3, d.a10 - 1.0, (d.a11 - d.a10 - 1.0) / a3};
}

double evaluate_eigenfunction(const NuDerived& d, int n, double s) {
  const EigenfunctionFactors f = eigenfunction_factors(d);
  const double a3 = d.input.a3;
  if (!(s > 0.0 && s < 1.0 / a3)) {
    throw Error(ErrorKind::DomainError, "s = " + std::to_string(s) + " outside (0, 1/a3)");
  }
  return std::pow(s, f.p1) * std::pow(1.0 - a3 * s, f.p2) *
         special::jacobi(n, f.ja, f.jb, 1.0 - 2.0 * a3 * s);
}

double evaluate_eigenfunction_limit(const NuDerived& d, int n, double s) {
  if (d.input.a3 != 0.0) throw Error(ErrorKind::NonzeroA3, "limit form requires a3 = 0");
  if (!(s > 0.0)) throw Error(ErrorKind::DomainError, "limit form requires s > 0");
  return std::pow(s, d.a12) * std::exp(d.a13 * s) * special::laguerre(n, d.a10 - 1.0, d.a11 * s);
}

}  // namespace ptnu::nu
