#include "ptnu/quadrature.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "ptnu/error.hpp"

namespace ptnu::special {

namespace {

// Reference rule on [-1, 1]; Newton on the Legendre recurrence from the
// Chebyshev-like initial guesses.
QuadratureRule reference_rule(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.interval = {-1.0, 1.0};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const QuadratureRule& panel_rule() {
  static const QuadratureRule rule = reference_rule(kPanelOrder);
  return rule;
}

double panel_sum(const std::function<double(double)>& f, double a, double b) {
  const auto& ref = panel_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
    const double x = mid + half * ref.nodes[i];
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw Error(ErrorKind::NonFinite, "integrand not finite at x = " + std::to_string(x));
    }
    sum += ref.weights[i] * fx;
  }
  return sum * half;
}

void check_interval(double lo, double hi, int panels) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw Error(ErrorKind::InvalidArgument, "integrate requires finite lo < hi");
  }
  if (panels < 1) throw Error(ErrorKind::InvalidArgument, "integrate requires panels >= 1");
}

double composite_parallel(const std::function<double(double)>& f, const std::vector<double>& edges) {
  const int count = static_cast<int>(edges.size()) - 1;
  std::vector<double> sums(count, 0.0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (int j = 0; j < count; ++j) {
    try {
      sums[j] = panel_sum(f, edges[j], edges[j + 1]);
    } catch (...) {
#pragma omp critical(ptnu_quadrature_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  double total = 0.0;
  for (double s : sums) total += s;
  return total;
}

double composite_serial(const std::function<double(double)>& f, const std::vector<double>& edges) {
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < edges.size(); ++j) total += panel_sum(f, edges[j], edges[j + 1]);
  return total;
}

}  // namespace

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "gauss_legendre requires n >= 1");
  if (!(hi > lo)) throw Error(ErrorKind::InvalidArgument, "gauss_legendre requires lo < hi");
  QuadratureRule rule = reference_rule(n);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  rule.interval = {lo, hi};
  return rule;
}

std::vector<double> panel_boundaries(double lo, double hi, int panels, Grading grading) {
  check_interval(lo, hi, panels);
  const double width = (hi - lo) / panels;
  const bool grade_lo = grading == Grading::Lower || grading == Grading::Both;
  const bool grade_hi = grading == Grading::Upper || grading == Grading::Both;

  std::vector<double> edges;
  edges.push_back(lo);
  if (grade_lo) {
    for (int k = kGradingLayers - 1; k >= 1; --k) {
      edges.push_back(lo + width * std::pow(kGradingRatio, k));
    }
  }
  for (int j = 1; j < panels; ++j) edges.push_back(lo + j * width);
  if (grade_hi) {
    for (int k = 1; k < kGradingLayers; ++k) edges.push_back(hi - width * std::pow(kGradingRatio, k));
  }
  edges.push_back(hi);
  return edges;
}

IntegrationResult integrate(const std::function<double(double)>& f, double lo, double hi,
                            int panels, Grading grading) {
  const double coarse = composite_parallel(f, panel_boundaries(lo, hi, panels, grading));
  const double fine = composite_parallel(f, panel_boundaries(lo, hi, 2 * panels, grading));
  return {fine, std::abs(fine - coarse)};
}

IntegrationResult integrate_serial(const std::function<double(double)>& f, double lo, double hi,
                                   int panels, Grading grading) {
  const double coarse = composite_serial(f, panel_boundaries(lo, hi, panels, grading));
  const double fine = composite_serial(f, panel_boundaries(lo, hi, 2 * panels, grading));
  return {fine, std::abs(fine - coarse)};
}

}  // namespace ptnu::special
