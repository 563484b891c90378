#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sgr/problem.hpp"

namespace sgr {

// Reference-dependent constants entering the proved bounds.
struct BoundRefs {
  double dist_y = 0.0;      // ||y* - ydot||
  double dist_x0_sq = 0.0;  // ||x0 - x*||^2
  double bx_xstar = 0.0;    // b_X(x*, xdot)
  double by_ystar = 0.0;    // b_Y(y*, ydot)
  double norm_ystar = 0.0;  // ||y*||
};

struct BoundParams {
  Algorithm algorithm = Algorithm::Asgard;
  double l_a_bar = 0.0;
  double beta1 = 0.0;   // ASGARD
  double gamma1 = 0.0;  // ADSGARD
  double gamma0 = 0.0;  // ASALGARD
  double mu_f = 0.0;    // strongly convex variant
  BoundRefs refs;
};

// Closed-form feasibility bound at iterate k; +inf at k = 0 (the theorems
// bound iterates from k = 1 on, the start is arbitrary).
double feasibility_bound(const BoundParams& p, std::size_t k);

// (lower, upper) bracket for f(x_k) - f*.  The upper bounds of the O(1/k)
// algorithms contain the measured ||A x_k - c||; the accelerated variants
// use their closed forms.
std::pair<double, double> objective_bounds(const BoundParams& p, std::size_t k,
                                           double measured_feasibility);

// a <= b up to the floating-point slack used for all proved-inequality
// assertions: b * (1 + 1e-7) + 1e-9.
bool leq_with_tol(double a, double b);

struct Violation {
  std::size_t row = 0;
  std::string quantity;
  double measured = 0.0;
  double bound = 0.0;
};

struct CheckReport {
  bool bounds_available = false;
  std::vector<Violation> violations;
  // informational: log-log slope of feasibility between the two rows
  // nearest k=100 and k=1000 (NaN when not computable)
  double feasibility_loglog_slope = 0.0;
};

// Compares each row's measured quantities against its stored bound columns.
CheckReport check_trace(const Trace& trace);

std::string report_to_json(const CheckReport& report);

// log-log slope of `values` vs k between rows with k in [k_lo, k_hi].
double loglog_slope(const Trace& trace, std::size_t k_lo, std::size_t k_hi);

}  // namespace sgr
