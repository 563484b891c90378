#include "sgr/smoothing.hpp"

#include <cmath>
#include <stdexcept>

#include "sgr/kernels.hpp"

namespace sgr {

double Smoother::bregman(std::span<const double> z) const {
  if (z.size() != center.size()) throw std::invalid_argument("bregman: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double d = z[i] - center[i];
    s += d * d;
  }
  return 0.5 * s;
}

Target Target::point(std::vector<double> c) {
  Target t;
  t.kind_ = Kind::Point;
  t.dim_ = c.size();
  t.c_ = std::move(c);
  return t;
}

Target Target::conjugate(ProxFn gstar, std::size_t dim) {
  if (gstar.dim() != dim) throw std::invalid_argument("target conjugate: dimension mismatch");
  Target t;
  t.kind_ = Kind::Conjugate;
  t.dim_ = dim;
  t.gstar_ = std::make_shared<ProxFn>(std::move(gstar));
  return t;
}

Target Target::cone(SetSpec cone_k, std::vector<double> c) {
  if (cone_k.dim != c.size()) throw std::invalid_argument("target cone: dimension mismatch");
  Target t;
  t.kind_ = Kind::Cone;
  t.dim_ = c.size();
  t.c_ = std::move(c);
  t.cone_ = cone_k;
  switch (cone_k.kind) {
    case SetKind::Point:
      // K = {0}: K* = R^m, so -K* = R^m and the projection is the identity;
      // encoded as a cone that never clips by reusing the halfspace machinery
      // is unnecessary -- handled specially in projections below.
      t.neg_dual_ = cone_k;
      break;
    case SetKind::NonnegOrthant:
      t.neg_dual_ = SetSpec::nonpos_orthant(cone_k.dim);
      break;
    case SetKind::NonposOrthant:
      t.neg_dual_ = SetSpec::nonneg_orthant(cone_k.dim);
      break;
    case SetKind::SecondOrderCone:
      t.neg_dual_ = SetSpec::neg_second_order_cone(cone_k.dim);
      break;
    case SetKind::NegSecondOrderCone:
      t.neg_dual_ = SetSpec::second_order_cone(cone_k.dim);
      break;
    default:
      throw std::invalid_argument("target cone: unsupported cone kind");
  }
  return t;
}

EvalResult Target::gstar_value(std::span<const double> y) const {
  switch (kind_) {
    case Kind::Point:
      return {kern::dot(c_, y), true};
    case Kind::Conjugate:
      return gstar_->eval(y);
    case Kind::Cone:
      return {0.0, false};
  }
  return {0.0, false};
}

EvalResult Target::feasibility_gap(std::span<const double> u) const {
  switch (kind_) {
    case Kind::Point: {
      std::vector<double> r(dim_);
      for (std::size_t i = 0; i < dim_; ++i) r[i] = u[i] - c_[i];
      return {kern::nrm2(r), true};
    }
    case Kind::Cone: {
      std::vector<double> r(dim_);
      for (std::size_t i = 0; i < dim_; ++i) r[i] = u[i] - c_[i];
      if (cone_.kind == SetKind::Point) {
        return {kern::nrm2(r), true};
      }
      std::vector<double> p(dim_);
      project(cone_, r, std::span<double>(p));
      double s = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        const double d = r[i] - p[i];
        s += d * d;
      }
      return {std::sqrt(s), true};
    }
    case Kind::Conjugate:
      return {0.0, false};
  }
  return {0.0, false};
}

std::vector<double> SmoothedDualOracle::x_star(std::span<const double> y) const {
  if (!(gamma > 0)) throw std::invalid_argument("x_star: gamma > 0 required");
  std::vector<double> aty(a->cols());
  a->apply_adjoint(y, std::span<double>(aty));
  std::vector<double> z(a->cols());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = bx.center[i] - aty[i] / gamma;
  return f->prox(1.0 / gamma, z);
}

EvalResult SmoothedDualOracle::fstar_gamma(std::span<const double> y,
                                           std::vector<double>* x_out) const {
  std::vector<double> xs = x_star(y);
  const EvalResult fv = f->eval(xs);
  std::vector<double> ax(a->rows());
  a->apply(std::span<const double>(xs), std::span<double>(ax));
  const double value = -kern::dot(ax, y) - fv.value - gamma * bx.bregman(xs);
  if (x_out) *x_out = std::move(xs);
  if (!fv.evaluable) return {value, false};
  return {value, true};
}

std::vector<double> SmoothedPrimalOracle::y_star(std::span<const double> u) const {
  if (!(beta > 0)) throw std::invalid_argument("y_star: beta > 0 required");
  const std::size_t m = target->dim();
  if (u.size() != m) throw std::invalid_argument("y_star: dimension mismatch");
  std::vector<double> out(m);
  switch (target->kind()) {
    case Target::Kind::Point: {
      const std::vector<double>& c = target->offset();
      for (std::size_t i = 0; i < m; ++i) out[i] = by.center[i] + (u[i] - c[i]) / beta;
      break;
    }
    case Target::Kind::Conjugate: {
      std::vector<double> z(m);
      for (std::size_t i = 0; i < m; ++i) z[i] = by.center[i] + u[i] / beta;
      target->gstar().prox(1.0 / beta, z, std::span<double>(out));
      break;
    }
    case Target::Kind::Cone: {
      const std::vector<double>& c = target->offset();
      std::vector<double> z(m);
      for (std::size_t i = 0; i < m; ++i) z[i] = by.center[i] + (u[i] - c[i]) / beta;
      if (target->neg_dual_cone().kind == SetKind::Point) {
        out = std::move(z);  // K = {0}: projection onto -K* = R^m
      } else {
        project(target->neg_dual_cone(), z, std::span<double>(out));
      }
      break;
    }
  }
  return out;
}

EvalResult SmoothedPrimalOracle::g_beta_value(std::span<const double> u) const {
  const std::vector<double> ys = y_star(u);
  switch (target->kind()) {
    case Target::Kind::Point:
    case Target::Kind::Conjugate: {
      const EvalResult gs = target->gstar_value(ys);
      const double value = kern::dot(u, ys) - gs.value - beta * by.bregman(ys);
      return {value, gs.evaluable};
    }
    case Target::Kind::Cone: {
      // max over y in -K* of <u - c, y> - (beta/2) ||y - ydot||^2
      const std::vector<double>& c = target->offset();
      double v = 0.0;
      for (std::size_t i = 0; i < ys.size(); ++i) v += (u[i] - c[i]) * ys[i];
      return {v - beta * by.bregman(ys), true};
    }
  }
  return {0.0, false};
}

EvalResult smoothed_gap(const ProxFn& f, const LinearOp& a, const Target& target,
                        std::span<const double> x, std::span<const double> y, double gamma,
                        double beta, const Smoother& bx, const Smoother& by) {
  const EvalResult fx = f.eval(x);
  std::vector<double> ax(a.rows());
  a.apply(x, std::span<double>(ax));
  SmoothedPrimalOracle primal{&target, by, beta};
  const EvalResult gb = primal.g_beta_value(ax);
  SmoothedDualOracle dual{&f, &a, bx, gamma};
  const EvalResult fs = dual.fstar_gamma(y);
  const EvalResult gs = target.gstar_value(y);
  const double value = fx.value + gb.value + fs.value + gs.value;
  const bool evaluable =
      fx.evaluable && gb.evaluable && fs.evaluable && gs.evaluable && std::isfinite(value);
  return {value, evaluable};
}

}  // namespace sgr
