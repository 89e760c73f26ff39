#pragma once

// Jacobi and associated Laguerre polynomials evaluated by their three-term
// recurrences in the degree. Templated on the floating type so wavefunction
// evaluation can run in extended precision.

#include <cmath>
#include <string>

#include "ptnu/error.hpp"

namespace ptnu::special {

namespace detail {
inline void check_index(double a, const char* name) {
  if (!(a > -1.0) || !std::isfinite(a)) {
    throw Error(ErrorKind::InvalidIndex,
                std::string(name) + " must be finite and > -1, got " + std::to_string(a));
  }
}
inline void check_degree(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidIndex, "polynomial degree must be >= 0");
}
}  // namespace detail

/// P_n^{(a,b)}(x), a,b > -1.
template <typename T = double>
T jacobi(int n, T a, T b, T x) {
  detail::check_degree(n);
  detail::check_index(static_cast<double>(a), "jacobi a");
  detail::check_index(static_cast<double>(b), "jacobi b");
  if (n == 0) return T(1);
  T p_prev = T(1);
  T p = (a + T(1)) + (a + b + T(2)) * (x - T(1)) / T(2);
  const T ab = a + b;
  const T a2b2 = a * a - b * b;
  for (int k = 2; k <= n; ++k) {
    const T c = T(2 * k) + ab;  // 2k + a + b
    const T lead = T(2 * k) * (T(k) + ab) * (c - T(2));
    const T mid = (c - T(1)) * (c * (c - T(2)) * x + a2b2);
    const T tail = T(2) * (T(k) + a - T(1)) * (T(k) + b - T(1)) * c;
    const T next = (mid * p - tail * p_prev) / lead;
    p_prev = p;
    p = next;
  }
  return p;
}

/// Associated Laguerre L_n^{a}(x), a > -1.
template <typename T = double>
T laguerre(int n, T a, T x) {
  detail::check_degree(n);
  detail::check_index(static_cast<double>(a), "laguerre a");
  if (n == 0) return T(1);
  T l_prev = T(1);
  T l = T(1) + a - x;
  for (int k = 2; k <= n; ++k) {
    const T next = ((T(2 * k - 1) + a - x) * l - (T(k - 1) + a) * l_prev) / T(k);
    l_prev = l;
    l = next;
  }
  return l;
}

/// Binomial coefficient C(top, k) for real top with top - k + 1 > 0,
/// computed from log-gamma differences.
double binomial(double top, int k);

}  // namespace ptnu::special
