#include "ptnu/special_functions.hpp"

#include <cmath>

namespace ptnu::special {

double binomial(double top, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "binomial k must be >= 0");
  if (k == 0) return 1.0;
  if (!(top - k + 1.0 > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "binomial requires top - k + 1 > 0");
  }
  // All gamma arguments are positive, so lgamma carries no sign.
  return std::exp(std::lgamma(top + 1.0) - std::lgamma(k + 1.0) - std::lgamma(top - k + 1.0));
}

}  // namespace ptnu::special
