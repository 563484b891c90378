#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sgr {

// Euclidean projections onto the simple sets used by the prox catalog and
// the cone-constrained solvers.
enum class SetKind {
  Point,
  NonnegOrthant,
  NonposOrthant,
  Halfspace,        // { v : <a, v> <= b }
  Hyperplane,       // { v : <a, v> = b }
  SecondOrderCone,  // { (t, u) : ||u|| <= t }
  NegSecondOrderCone
};

struct SetSpec {
  SetKind kind;
  std::vector<double> a;  // normal for halfspace/hyperplane, point for Point
  double b = 0.0;

  static SetSpec point(std::vector<double> c);
  static SetSpec nonneg_orthant(std::size_t n);
  static SetSpec nonpos_orthant(std::size_t n);
  static SetSpec halfspace(std::vector<double> a, double b);
  static SetSpec hyperplane(std::vector<double> a, double b);
  static SetSpec second_order_cone(std::size_t n);
  static SetSpec neg_second_order_cone(std::size_t n);

  std::size_t dim = 0;
};

void project(const SetSpec& set, std::span<const double> v, std::span<double> out);
std::vector<double> project(const SetSpec& set, const std::vector<double>& v);

struct EvalResult {
  double value = 0.0;
  bool evaluable = true;  // false: skip objective logging (support kinds off-cone)
  bool finite() const { return evaluable && std::isfinite(value); }
};

// Convex function presented by value evaluation and a scaled proximal map
//   prox(rho, z) = argmin_u { f(u) + ||u - z||^2 / (2 rho) },
// everything in closed form per kind.
class ProxFn {
 public:
  enum class Kind {
    Zero,
    LinearNonnegLast,  // cost * x_n + indicator(x_n >= 0)
    IndicatorPoint,
    IndicatorNonneg,
    IndicatorHalfspace,
    IndicatorHyperplane,
    SupportHalfspace,
    SupportHyperplane,
    Quadratic,  // (mu/2) ||x - x0||^2
    BlockSum
  };

  static ProxFn zero(std::size_t n);
  static ProxFn linear_nonneg_last(std::size_t n, double cost);
  static ProxFn indicator_point(std::vector<double> c);
  static ProxFn indicator_nonneg(std::size_t n);
  static ProxFn indicator_halfspace(std::vector<double> a, double b);
  static ProxFn indicator_hyperplane(std::vector<double> a, double b);
  static ProxFn support_halfspace(std::vector<double> a, double b);
  static ProxFn support_hyperplane(std::vector<double> a, double b);
  static ProxFn quadratic(double mu, std::vector<double> x0);
  static ProxFn block_sum(std::vector<ProxFn> blocks);

  std::size_t dim() const;
  Kind kind() const;
  double strong_convexity() const;  // mu_f (0 unless Quadratic)
  const std::vector<ProxFn>& blocks() const;
  // x0 of the quadratic kind (throws for other kinds)
  const std::vector<double>& quadratic_center() const;

  EvalResult eval(std::span<const double> x) const;
  void prox(double rho, std::span<const double> z, std::span<double> out) const;
  std::vector<double> prox(double rho, const std::vector<double>& z) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit ProxFn(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace sgr
