#include "sgr/schedules.hpp"

#include <cmath>
#include <stdexcept>

namespace sgr {

double cubic_tau_root(double tau_prev, double lb) {
  if (!(tau_prev > 0.0 && tau_prev <= 1.0)) {
    throw std::invalid_argument("cubic_tau_root: tau_prev must be in (0, 1]");
  }
  if (!(lb >= 1.0)) throw std::invalid_argument("cubic_tau_root: L_b >= 1 required");

  // In u = tau / tau_prev the equation becomes
  //   q(u) = (tau_prev/L) u^3 + u^2 + tau_prev u - 1 = 0,
  // with q(0) = -1 < 0 < q(1), keeping full relative accuracy as tau -> 0.
  const double c3 = tau_prev / lb;
  const double c1 = tau_prev;
  auto q = [&](double u) { return ((c3 * u + 1.0) * u + c1) * u - 1.0; };

  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (q(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double u = 0.5 * (lo + hi);

  // A few Newton polish steps from inside the bracket; q' > 0 on (0,1).
  for (int it = 0; it < 4; ++it) {
    const double qv = q(u);
    const double qd = (3.0 * c3 * u + 2.0) * u + c1;
    const double step = qv / qd;
    const double un = u - step;
    if (!(un > 0.0 && un < 1.0)) break;
    u = un;
    if (std::fabs(step) <= 1e-17 * u) break;
  }
  return tau_prev * u;
}

}  // namespace sgr
