#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

namespace sgr {

// Unique root in (0,1) of  tau^3/L_b + tau^2 + tau_prev^2 * tau - tau_prev^2 = 0.
// Bisection on (0,1) in the scaled variable u = tau/tau_prev (same bracket),
// then polished so the defining identity holds to machine precision even
// after 1e5 steps where tau ~ 1/k.
double cubic_tau_root(double tau_prev, double lb);

// tau_0 = 1; each advance solves the cubic at the previous value.
class TauCubicSchedule {
 public:
  explicit TauCubicSchedule(double lb = 1.0) : lb_(lb) {}
  double current() const { return tau_; }
  std::size_t step() const { return k_; }
  double next() {
    tau_ = cubic_tau_root(tau_, lb_);
    ++k_;
    return tau_;
  }

 private:
  double lb_;
  double tau_ = 1.0;
  std::size_t k_ = 0;
};

// t_{k+1} = (1 + sqrt(1 + 4 t_k^2))/2,  beta_{k+1} = ((t_k - 1)/t_k) beta_k.
// The beta recursion starts from an externally fixed beta_1 (the k = 0
// factor would be zero), so solvers seed the state at (t_1, beta_1).
struct TkSchedule {
  double t = 1.0;
  double beta = 1.0;

  std::pair<double, double> next() {
    const double factor = (t - 1.0) / t;
    t = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    beta *= factor;
    return {t, beta};
  }
};

// ASGARD homotopy: beta_{k+1} = beta_k / (1 + tau_k / L_bY).
struct AsgardHomotopy {
  double beta;
  double lb = 1.0;
  void advance(double tau) { beta /= 1.0 + tau / lb; }
};

// ADSGARD homotopy: gamma_{k+1} = gamma_k / (1 + tau_k / L_bX),
// beta_{k+1} = (1 - tau_k) beta_k, with beta_1 * gamma_1 = L_A.
struct AdsgardHomotopy {
  double gamma;
  double beta;
  double lbx = 1.0;
  void advance(double tau) {
    gamma /= 1.0 + tau / lbx;
    beta *= 1.0 - tau;
  }
};

}  // namespace sgr
