#include "sgr/prox.hpp"

#include <cmath>
#include <stdexcept>

#include "sgr/kernels.hpp"

namespace sgr {

namespace {

void check_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": expected length " +
                                std::to_string(want) + ", got " + std::to_string(got));
  }
}

void require_normal(const std::vector<double>& a, const char* what) {
  if (kern::nrm2sq(a) == 0.0) {
    throw std::invalid_argument(std::string(what) + ": zero normal vector");
  }
}

// Membership tolerance for indicators: violation <= 1e-9 * (1 + ||params||).
double indicator_tol(double param_norm) { return 1e-9 * (1.0 + param_norm); }

}  // namespace

SetSpec SetSpec::point(std::vector<double> c) {
  SetSpec s{SetKind::Point, std::move(c), 0.0};
  s.dim = s.a.size();
  return s;
}
SetSpec SetSpec::nonneg_orthant(std::size_t n) {
  SetSpec s{SetKind::NonnegOrthant, {}, 0.0};
  s.dim = n;
  return s;
}
SetSpec SetSpec::nonpos_orthant(std::size_t n) {
  SetSpec s{SetKind::NonposOrthant, {}, 0.0};
  s.dim = n;
  return s;
}
SetSpec SetSpec::halfspace(std::vector<double> a, double b) {
  require_normal(a, "halfspace");
  SetSpec s{SetKind::Halfspace, std::move(a), b};
  s.dim = s.a.size();
  return s;
}
SetSpec SetSpec::hyperplane(std::vector<double> a, double b) {
  require_normal(a, "hyperplane");
  SetSpec s{SetKind::Hyperplane, std::move(a), b};
  s.dim = s.a.size();
  return s;
}
SetSpec SetSpec::second_order_cone(std::size_t n) {
  if (n < 1) throw std::invalid_argument("second_order_cone: dim >= 1 required");
  SetSpec s{SetKind::SecondOrderCone, {}, 0.0};
  s.dim = n;
  return s;
}
SetSpec SetSpec::neg_second_order_cone(std::size_t n) {
  if (n < 1) throw std::invalid_argument("neg_second_order_cone: dim >= 1 required");
  SetSpec s{SetKind::NegSecondOrderCone, {}, 0.0};
  s.dim = n;
  return s;
}

void project(const SetSpec& set, std::span<const double> v, std::span<double> out) {
  check_dim(v.size(), set.dim, "project input");
  check_dim(out.size(), set.dim, "project output");
  switch (set.kind) {
    case SetKind::Point:
      for (std::size_t i = 0; i < set.dim; ++i) out[i] = set.a[i];
      break;
    case SetKind::NonnegOrthant:
      kern::clamp_min(v, 0.0, out);
      break;
    case SetKind::NonposOrthant:
      kern::clamp_max(v, 0.0, out);
      break;
    case SetKind::Halfspace: {
      const double viol = kern::dot(set.a, v) - set.b;
      if (viol <= 0.0) {
        for (std::size_t i = 0; i < set.dim; ++i) out[i] = v[i];
      } else {
        const double step = viol / kern::nrm2sq(set.a);
        for (std::size_t i = 0; i < set.dim; ++i) out[i] = v[i] - step * set.a[i];
      }
      break;
    }
    case SetKind::Hyperplane: {
      const double step = (kern::dot(set.a, v) - set.b) / kern::nrm2sq(set.a);
      for (std::size_t i = 0; i < set.dim; ++i) out[i] = v[i] - step * set.a[i];
      break;
    }
    case SetKind::SecondOrderCone:
    case SetKind::NegSecondOrderCone: {
      const double sgn = set.kind == SetKind::SecondOrderCone ? 1.0 : -1.0;
      // proj_{-K}(v) = -proj_K(-v); fold the sign into t and u.
      const double t = sgn * v[0];
      double un = 0.0;
      for (std::size_t i = 1; i < set.dim; ++i) un += v[i] * v[i];
      un = std::sqrt(un);
      if (un <= t) {
        for (std::size_t i = 0; i < set.dim; ++i) out[i] = v[i];
      } else if (un <= -t) {
        for (std::size_t i = 0; i < set.dim; ++i) out[i] = 0.0;
      } else {
        const double alpha = (t + un) / 2.0;
        out[0] = sgn * alpha;
        const double sc = un > 0 ? alpha / un : 0.0;
        for (std::size_t i = 1; i < set.dim; ++i) out[i] = sc * v[i];
      }
      break;
    }
  }
}

std::vector<double> project(const SetSpec& set, const std::vector<double>& v) {
  std::vector<double> out(v.size());
  project(set, std::span<const double>(v), std::span<double>(out));
  return out;
}

struct ProxFn::Impl {
  Kind kind;
  std::size_t dim = 0;
  double cost = 0.0;               // LinearNonnegLast
  double mu = 0.0;                 // Quadratic
  std::vector<double> point;      // IndicatorPoint c / Quadratic x0
  SetSpec set{SetKind::Point, {}, 0.0};  // halfspace/hyperplane kinds
  std::vector<ProxFn> children;    // BlockSum
  double param_norm = 0.0;
};

ProxFn ProxFn::zero(std::size_t n) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Zero;
  impl->dim = n;
  return ProxFn(std::move(impl));
}

ProxFn ProxFn::linear_nonneg_last(std::size_t n, double cost) {
  if (n < 1) throw std::invalid_argument("linear_nonneg_last: dim >= 1 required");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::LinearNonnegLast;
  impl->dim = n;
  impl->cost = cost;
  impl->param_norm = std::fabs(cost);
  return ProxFn(std::move(impl));
}

ProxFn ProxFn::indicator_point(std::vector<double> c) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::IndicatorPoint;
  impl->dim = c.size();
  impl->param_norm = kern::nrm2(c);
  impl->point = std::move(c);
  return ProxFn(std::move(impl));
}

ProxFn ProxFn::indicator_nonneg(std::size_t n) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::IndicatorNonneg;
  impl->dim = n;
  return ProxFn(std::move(impl));
}

namespace {
SetSpec make_set(std::vector<double> a, double b, bool halfspace) {
  return halfspace ? SetSpec::halfspace(std::move(a), b) : SetSpec::hyperplane(std::move(a), b);
}
}  // namespace

ProxFn ProxFn::indicator_halfspace(std::vector<double> a, double b) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::IndicatorHalfspace;
  impl->dim = a.size();
  impl->param_norm = std::sqrt(kern::nrm2sq(a) + b * b);
  impl->set = make_set(std::move(a), b, true);
  return ProxFn(std::move(impl));
}
ProxFn ProxFn::indicator_hyperplane(std::vector<double> a, double b) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::IndicatorHyperplane;
  impl->dim = a.size();
  impl->param_norm = std::sqrt(kern::nrm2sq(a) + b * b);
  impl->set = make_set(std::move(a), b, false);
  return ProxFn(std::move(impl));
}
ProxFn ProxFn::support_halfspace(std::vector<double> a, double b) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::SupportHalfspace;
  impl->dim = a.size();
  impl->param_norm = std::sqrt(kern::nrm2sq(a) + b * b);
  impl->set = make_set(std::move(a), b, true);
  return ProxFn(std::move(impl));
}
ProxFn ProxFn::support_hyperplane(std::vector<double> a, double b) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::SupportHyperplane;
  impl->dim = a.size();
  impl->param_norm = std::sqrt(kern::nrm2sq(a) + b * b);
  impl->set = make_set(std::move(a), b, false);
  return ProxFn(std::move(impl));
}

ProxFn ProxFn::quadratic(double mu, std::vector<double> x0) {
  if (mu <= 0) throw std::invalid_argument("quadratic: mu > 0 required");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Quadratic;
  impl->dim = x0.size();
  impl->mu = mu;
  impl->param_norm = kern::nrm2(x0);
  impl->point = std::move(x0);
  return ProxFn(std::move(impl));
}

ProxFn ProxFn::block_sum(std::vector<ProxFn> blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_sum: no blocks");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::BlockSum;
  impl->dim = 0;
  for (const ProxFn& b : blocks) impl->dim += b.dim();
  impl->children = std::move(blocks);
  return ProxFn(std::move(impl));
}

std::size_t ProxFn::dim() const { return impl_->dim; }
ProxFn::Kind ProxFn::kind() const { return impl_->kind; }
double ProxFn::strong_convexity() const { return impl_->kind == Kind::Quadratic ? impl_->mu : 0.0; }
const std::vector<ProxFn>& ProxFn::blocks() const { return impl_->children; }

const std::vector<double>& ProxFn::quadratic_center() const {
  if (impl_->kind != Kind::Quadratic)
    throw std::logic_error("quadratic_center: not a quadratic function");
  return impl_->point;
}

EvalResult ProxFn::eval(std::span<const double> x) const {
  check_dim(x.size(), impl_->dim, "eval input");
  const double tol = indicator_tol(impl_->param_norm);
  switch (impl_->kind) {
    case Kind::Zero:
      return {0.0, true};
    case Kind::LinearNonnegLast: {
      const double last = x[impl_->dim - 1];
      if (last < -tol) return {kInf, true};
      return {impl_->cost * last, true};
    }
    case Kind::IndicatorPoint: {
      double d2 = 0.0;
      for (std::size_t i = 0; i < impl_->dim; ++i) {
        const double d = x[i] - impl_->point[i];
        d2 += d * d;
      }
      return {std::sqrt(d2) <= tol ? 0.0 : kInf, true};
    }
    case Kind::IndicatorNonneg: {
      for (std::size_t i = 0; i < impl_->dim; ++i) {
        if (x[i] < -tol) return {kInf, true};
      }
      return {0.0, true};
    }
    case Kind::IndicatorHalfspace: {
      const double v = kern::dot(impl_->set.a, x) - impl_->set.b;
      return {v <= tol ? 0.0 : kInf, true};
    }
    case Kind::IndicatorHyperplane: {
      const double v = kern::dot(impl_->set.a, x) - impl_->set.b;
      return {std::fabs(v) <= tol ? 0.0 : kInf, true};
    }
    case Kind::SupportHalfspace:
    case Kind::SupportHyperplane: {
      // s_X is finite only on the cone spanned by the normal; elsewhere the
      // value is flagged non-evaluable so objective logging is skipped.
      const double an2 = kern::nrm2sq(impl_->set.a);
      const double lambda = kern::dot(impl_->set.a, x) / an2;
      double resid2 = 0.0;
      for (std::size_t i = 0; i < impl_->dim; ++i) {
        const double r = x[i] - lambda * impl_->set.a[i];
        resid2 += r * r;
      }
      const double xtol = 1e-9 * (1.0 + kern::nrm2(x));
      const bool on_ray = std::sqrt(resid2) <= xtol &&
                          (impl_->kind == Kind::SupportHyperplane || lambda >= -xtol);
      if (!on_ray) return {kInf, false};
      return {lambda * impl_->set.b, true};
    }
    case Kind::Quadratic: {
      double d2 = 0.0;
      for (std::size_t i = 0; i < impl_->dim; ++i) {
        const double d = x[i] - impl_->point[i];
        d2 += d * d;
      }
      return {0.5 * impl_->mu * d2, true};
    }
    case Kind::BlockSum: {
      double total = 0.0;
      bool evaluable = true;
      std::size_t off = 0;
      for (const ProxFn& b : impl_->children) {
        const EvalResult r = b.eval(x.subspan(off, b.dim()));
        evaluable = evaluable && r.evaluable;
        total += r.value;
        off += b.dim();
      }
      return {total, evaluable};
    }
  }
  return {kInf, false};
}

void ProxFn::prox(double rho, std::span<const double> z, std::span<double> out) const {
  if (!(rho > 0)) throw std::invalid_argument("prox: rho > 0 required");
  check_dim(z.size(), impl_->dim, "prox input");
  check_dim(out.size(), impl_->dim, "prox output");
  switch (impl_->kind) {
    case Kind::Zero:
      for (std::size_t i = 0; i < impl_->dim; ++i) out[i] = z[i];
      break;
    case Kind::LinearNonnegLast: {
      for (std::size_t i = 0; i + 1 < impl_->dim; ++i) out[i] = z[i];
      out[impl_->dim - 1] = std::max(z[impl_->dim - 1] - impl_->cost * rho, 0.0);
      break;
    }
    case Kind::IndicatorPoint:
      for (std::size_t i = 0; i < impl_->dim; ++i) out[i] = impl_->point[i];
      break;
    case Kind::IndicatorNonneg:
      kern::clamp_min(z, 0.0, out);
      break;
    case Kind::IndicatorHalfspace:
    case Kind::IndicatorHyperplane:
      project(impl_->set, z, out);
      break;
    case Kind::SupportHalfspace:
    case Kind::SupportHyperplane: {
      // Moreau identity: prox_{rho s_X}(z) = z - rho * proj_X(z / rho).
      std::vector<double> scaled(impl_->dim);
      kern::scale(1.0 / rho, z, std::span<double>(scaled));
      std::vector<double> proj(impl_->dim);
      project(impl_->set, scaled, std::span<double>(proj));
      for (std::size_t i = 0; i < impl_->dim; ++i) out[i] = z[i] - rho * proj[i];
      break;
    }
    case Kind::Quadratic: {
      const double denom = 1.0 + rho * impl_->mu;
      for (std::size_t i = 0; i < impl_->dim; ++i) {
        out[i] = (z[i] + rho * impl_->mu * impl_->point[i]) / denom;
      }
      break;
    }
    case Kind::BlockSum: {
      std::size_t off = 0;
      for (const ProxFn& b : impl_->children) {
        b.prox(rho, z.subspan(off, b.dim()), out.subspan(off, b.dim()));
        off += b.dim();
      }
      break;
    }
  }
}

std::vector<double> ProxFn::prox(double rho, const std::vector<double>& z) const {
  std::vector<double> out(z.size());
  prox(rho, std::span<const double>(z), std::span<double>(out));
  return out;
}

}  // namespace sgr
