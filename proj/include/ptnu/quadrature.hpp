#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace ptnu::special {

/// Nodes and weights of a rule on a fixed interval.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::pair<double, double> interval;
};

/// n-point Gauss-Legendre rule mapped onto [lo, hi].
QuadratureRule gauss_legendre(int n, double lo, double hi);

/// Which ends of the interval get geometrically graded panels.
enum class Grading { None, Lower, Upper, Both };

struct IntegrationResult {
  double value;
  double err_estimate;
};

inline constexpr int kPanelOrder = 20;
inline constexpr int kGradingLayers = 12;
inline constexpr double kGradingRatio = 0.15;

/// Composite 20-point Gauss-Legendre over `panels` uniform panels; graded ends
/// replace the end panel by kGradingLayers geometric layers shrinking toward
/// the endpoint. The estimate compares against the same rule on 2*panels.
/// Nodes never touch the endpoints, so integrable endpoint singularities are
/// fine. Throws NonFinite if f is NaN/inf at a node.
///
/// Panel sums run in parallel; the total is accumulated in panel order, so the
/// result is identical to integrate_serial bit for bit.
IntegrationResult integrate(const std::function<double(double)>& f, double lo, double hi,
                            int panels, Grading grading = Grading::None);

IntegrationResult integrate_serial(const std::function<double(double)>& f, double lo, double hi,
                                   int panels, Grading grading = Grading::None);

/// Panel boundaries used by integrate (exposed for tests).
std::vector<double> panel_boundaries(double lo, double hi, int panels, Grading grading);

}  // namespace ptnu::special
