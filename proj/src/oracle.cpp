#include "ptnu/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ptnu/error.hpp"

namespace ptnu::oracle {

RadialOperator discretize(const std::function<double(double)>& scaled_potential, double length,
                          int n_points) {
  if (n_points < kMinGridPoints) {
    throw Error(ErrorKind::GridTooSmall, "need at least " + std::to_string(kMinGridPoints) +
                                             " interior points, got " + std::to_string(n_points));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw Error(ErrorKind::InvalidArgument, "domain length must be finite and > 0");
  }
  RadialOperator op;
  op.n_points = n_points;
  op.length = length;
  op.h = length / (n_points + 1);
  op.offdiag = -1.0 / (op.h * op.h);
  op.diag.resize(n_points);
  const double kinetic = 2.0 / (op.h * op.h);
  bool finite = true;
#pragma omp parallel for schedule(static) reduction(&& : finite)
  for (int i = 0; i < n_points; ++i) {
    op.diag[i] = kinetic + scaled_potential(op.grid(i));
    finite = finite && std::isfinite(op.diag[i]);
  }
  if (!finite) throw Error(ErrorKind::NonFinite, "potential not finite on the grid");
  return op;
}

RadialOperator discretize(const pt::PtPotential& p, int n_points) {
  p.validate();
  const double v1p = p.v1_prime();
  const double v2p = p.v2_prime();
  const double alpha = p.alpha;
  return discretize(
      [=](double r) {
        const double s = std::sin(alpha * r);
        const double c = std::cos(alpha * r);
        return v1p / (s * s) + v2p / (c * c);
      },
      p.well_width(), n_points);
}

int sturm_count(const RadialOperator& op, double x) {
  const double e2 = op.offdiag * op.offdiag;
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, e2);
  int count = 0;
  double q = op.diag[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (int i = 1; i < op.n_points; ++i) {
    q = (op.diag[i] - x) - e2 / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

namespace {

struct Interval {
  double lo;
  double hi;
};

Interval gerschgorin(const RadialOperator& op) {
  const auto [dmin, dmax] = std::minmax_element(op.diag.begin(), op.diag.end());
  const double radius = 2.0 * std::abs(op.offdiag);
  const double lo = *dmin - radius;
  const double hi = *dmax + radius;
  const double pad = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
  return {lo - pad, hi + pad};
}

// k-th (0-based) eigenvalue: count(x) > k exactly when x > lambda_k.
double bisect_eigenvalue(const RadialOperator& op, int k, Interval bounds) {
  double lo = bounds.lo;
  double hi = bounds.hi;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) break;
    if (sturm_count(op, mid) > k) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

void check_count(const RadialOperator& op, int count) {
  if (count < 1 || count > op.n_points) {
    throw Error(ErrorKind::InvalidArgument, "eigenvalue count must be in [1, n_points]");
  }
}

}  // namespace

std::vector<double> lowest_eigenvalues(const RadialOperator& op, int count) {
  check_count(op, count);
  const Interval bounds = gerschgorin(op);
  std::vector<double> values(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < count; ++k) values[k] = bisect_eigenvalue(op, k, bounds);
  return values;
}

std::vector<double> lowest_eigenvalues_serial(const RadialOperator& op, int count) {
  check_count(op, count);
  const Interval bounds = gerschgorin(op);
  std::vector<double> values;
  values.reserve(count);
  for (int k = 0; k < count; ++k) values.push_back(bisect_eigenvalue(op, k, bounds));
  return values;
}

namespace {

// Tridiagonal solve with partial pivoting (the dgtsv elimination). Zero pivots
// are nudged to a tiny value, which is what inverse iteration wants.
void solve_tridiagonal(std::vector<double> sub, std::vector<double> d, std::vector<double> sup,
                       std::vector<double>& b) {
  const std::size_t n = d.size();
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  auto nonzero = [tiny](double v) { return v == 0.0 ? tiny : v; };
  std::vector<double> sup2(n > 2 ? n - 2 : 0, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(sub[i])) {
      d[i] = nonzero(d[i]);
      const double fact = sub[i] / d[i];
      d[i + 1] -= fact * sup[i];
      b[i + 1] -= fact * b[i];
    } else {
      const double fact = d[i] / sub[i];
      d[i] = sub[i];
      const double temp = d[i + 1];
      d[i + 1] = sup[i] - fact * temp;
      if (i + 2 < n) {
        sup2[i] = sup[i + 1];
        sup[i + 1] = -fact * sup2[i];
      }
      sup[i] = temp;
      const double tb = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tb - fact * b[i + 1];
    }
  }
  d[n - 1] = nonzero(d[n - 1]);
  b[n - 1] /= d[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - sup[n - 2] * b[n - 1]) / d[n - 2];
  for (std::size_t j = n - 2; j-- > 0;) {
    b[j] = (b[j] - sup[j] * b[j + 1] - sup2[j] * b[j + 2]) / d[j];
  }
}

void normalize_unit(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
}

}  // namespace

std::vector<double> eigenvector(const RadialOperator& op, double eigenvalue) {
  const std::size_t n = static_cast<std::size_t>(op.n_points);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i));
  normalize_unit(v);
  std::vector<double> shifted(op.diag);
  for (double& d : shifted) d -= eigenvalue;
  const std::vector<double> off(n - 1, op.offdiag);
  for (int iter = 0; iter < 4; ++iter) {
    solve_tridiagonal(off, shifted, off, v);
    normalize_unit(v);
  }
  // sign convention: first non-negligible component positive
  for (double x : v) {
    if (std::abs(x) > 1e-8) {
      if (x < 0.0) for (double& y : v) y = -y;
      break;
    }
  }
  return v;
}

double richardson(double e_h, double e_h2, int order) {
  const double factor = std::ldexp(1.0, order);
  return (factor * e_h2 - e_h) / (factor - 1.0);
}

std::vector<ConvergedEigenvalue> converged_eigenvalues(const pt::PtPotential& p, int n_points,
                                                       int count) {
  const auto coarse = lowest_eigenvalues(discretize(p, n_points), count);
  const auto half = lowest_eigenvalues(discretize(p, 2 * n_points + 1), count);
  const auto quarter = lowest_eigenvalues(discretize(p, 4 * n_points + 3), count);
  std::vector<ConvergedEigenvalue> out(count);
  for (int k = 0; k < count; ++k) {
    out[k].eps_h = coarse[k];
    out[k].eps_h2 = half[k];
    out[k].extrapolated = richardson(coarse[k], half[k]);
    out[k].order_estimate = std::log2((coarse[k] - half[k]) / (half[k] - quarter[k]));
  }
  return out;
}

double ode_residual(const std::function<double(double)>& wavefunction, const pt::PtPotential& p,
                    double energy, const std::vector<double>& samples) {
  p.validate();
  const double length = p.well_width();
  const double delta = 1e-3 * length;
  const double step = 1e-4 * length;
  const double eps = 2.0 * p.m * energy;
  const double v1p = p.v1_prime();
  const double v2p = p.v2_prime();

  double worst = 0.0;
  double peak = 0.0;
  for (double r : samples) {
    if (!(r > delta && r < length - delta)) {
      throw Error(ErrorKind::DomainError, "sample r = " + std::to_string(r) + " too close to the well edge");
    }
    const double f0 = wavefunction(r);
    const double second = (-wavefunction(r + 2.0 * step) + 16.0 * wavefunction(r + step) - 30.0 * f0 +
                           16.0 * wavefunction(r - step) - wavefunction(r - 2.0 * step)) /
                          (12.0 * step * step);
    const double s = std::sin(p.alpha * r);
    const double c = std::cos(p.alpha * r);
    const double res = second + (eps - v1p / (s * s) - v2p / (c * c)) * f0;
    if (!std::isfinite(res)) throw Error(ErrorKind::NonFinite, "ODE residual not finite");
    worst = std::max(worst, std::abs(res));
    peak = std::max(peak, std::abs(f0));
  }
  if (!(peak > 0.0)) throw Error(ErrorKind::NonFinite, "wavefunction vanishes on all samples");
  return worst / peak;
}

}  // namespace ptnu::oracle
