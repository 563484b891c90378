#pragma once

#include <memory>
#include <span>
#include <vector>

#include "sgr/linops.hpp"
#include "sgr/prox.hpp"

namespace sgr {

// Quadratic Bregman smoother b(z, center) = (1/2) ||z - center||^2.
// The Lipschitz constant of the gradient is carried explicitly so the
// parameter schedules stay general, but only the quadratic smoother ships.
struct Smoother {
  std::vector<double> center;
  double lipschitz = 1.0;

  double bregman(std::span<const double> z) const;
};

// Composite-problem target describing g through what the dual steps need:
// a point c (g = indicator of {c}), a prox-capable conjugate g*, or a cone
// K with offset c (g = indicator of {u : u - c in K}).
class Target {
 public:
  enum class Kind { Point, Conjugate, Cone };

  static Target point(std::vector<double> c);
  static Target conjugate(ProxFn gstar, std::size_t dim);
  static Target cone(SetSpec cone_k, std::vector<double> c);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const std::vector<double>& offset() const { return c_; }   // Point / Cone
  const ProxFn& gstar() const { return *gstar_; }            // Conjugate
  const SetSpec& cone_k() const { return cone_; }            // Cone (the set K)
  const SetSpec& neg_dual_cone() const { return neg_dual_; } // Cone (-K*)

  // g*(y): <c, y> for a point target; evaluated ProxFn for a conjugate
  // target; flagged non-evaluable for cones.
  EvalResult gstar_value(std::span<const double> y) const;

  // distance of u to the feasible set of g: ||u - c|| (point),
  // dist(u - c, K) (cone); flagged non-evaluable for general conjugates.
  EvalResult feasibility_gap(std::span<const double> u) const;

 private:
  Kind kind_;
  std::size_t dim_ = 0;
  std::vector<double> c_;
  std::shared_ptr<const ProxFn> gstar_;
  SetSpec cone_{SetKind::Point, {}, 0.0};
  SetSpec neg_dual_{SetKind::Point, {}, 0.0};
};

// x*_gamma(y; xdot) = argmin_x { f(x) + <y, Ax> + gamma * b_X(x, xdot) },
// in closed form via prox_{f/gamma}(xdot - A^T y / gamma).
struct SmoothedDualOracle {
  const ProxFn* f;
  const LinearOp* a;
  Smoother bx;
  double gamma;

  std::vector<double> x_star(std::span<const double> y) const;
  // value of f*_gamma(-A^T y; xdot) = <-A^T y, x*> - f(x*) - gamma b_X(x*, xdot);
  // x* is returned through x_out when non-null.
  EvalResult fstar_gamma(std::span<const double> y, std::vector<double>* x_out = nullptr) const;
};

// y*_beta(u; ydot) = argmax_y { <u, y> - g*(y) - beta * b_Y(y, ydot) }.
struct SmoothedPrimalOracle {
  const Target* target;
  Smoother by;
  double beta;

  std::vector<double> y_star(std::span<const double> u) const;
  // g_beta(u; ydot) = <u, y*> - g*(y*) - beta * b_Y(y*, ydot)
  EvalResult g_beta_value(std::span<const double> u) const;
};

// Smoothed primal-dual gap
//   G_{gamma beta}(w; wdot) = f(x) + g_beta(Ax; ydot) + f*_gamma(-A^T y; xdot) + g*(y).
EvalResult smoothed_gap(const ProxFn& f, const LinearOp& a, const Target& target,
                        std::span<const double> x, std::span<const double> y, double gamma,
                        double beta, const Smoother& bx, const Smoother& by);

}  // namespace sgr
