#include "sgr/solvers.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "sgr/diagnostics.hpp"
#include "sgr/kernels.hpp"
#include "sgr/schedules.hpp"

namespace sgr {

namespace {

using Clock = std::chrono::steady_clock;
const double kNaN = std::nan("");

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

double objective_of(const Problem& p, const std::vector<double>& x) {
  const EvalResult r = p.f.eval(x);
  return r.evaluable ? r.value : kNaN;
}

double feasibility_of(const Problem& p, const std::vector<double>& ax) {
  const EvalResult r = p.target.feasibility_gap(ax);
  return r.evaluable ? r.value : kNaN;
}

std::optional<BoundParams> make_bound_params(const Problem& p, Algorithm alg,
                                             const SolverConfig& cfg,
                                             const std::vector<double>& x0, double beta1,
                                             double gamma1, double gamma0) {
  if (!p.ref) return std::nullopt;
  if (p.target.kind() == Target::Kind::Conjugate) return std::nullopt;
  // Restarted runs carry no proved rate; bound columns are omitted.
  if (cfg.restart_period) return std::nullopt;
  const Reference& ref = *p.ref;
  if (ref.y_star.size() != p.m() || ref.x_star.size() != p.n()) return std::nullopt;
  BoundParams bp;
  bp.algorithm = alg;
  bp.l_a_bar = p.l_a_bar;
  bp.beta1 = beta1;
  bp.gamma1 = gamma1;
  bp.gamma0 = gamma0;
  bp.mu_f = p.mu_f;
  double dy2 = 0.0;
  for (std::size_t i = 0; i < p.m(); ++i) {
    const double d = ref.y_star[i] - p.y_center[i];
    dy2 += d * d;
  }
  bp.refs.dist_y = std::sqrt(dy2);
  bp.refs.by_ystar = 0.5 * dy2;
  double dx2 = 0.0, cx2 = 0.0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    const double d0 = x0[i] - ref.x_star[i];
    const double dc = p.x_center[i] - ref.x_star[i];
    dx2 += d0 * d0;
    cx2 += dc * dc;
  }
  bp.refs.dist_x0_sq = dx2;
  bp.refs.bx_xstar = 0.5 * cx2;
  bp.refs.norm_ystar = kern::nrm2(ref.y_star);
  return bp;
}

// Accumulates rows, stamping bound columns and wallclock.
struct TraceBuilder {
  Trace trace;
  std::optional<BoundParams> bounds;
  double f_star = 0.0;
  Clock::time_point start = Clock::now();

  void push(std::size_t k, double objective, double feasibility, double gap, double tau,
            double beta, double gamma, bool restart = false, bool inner_warn = false) {
    TraceRow r;
    r.k = k;
    r.objective = objective;
    r.feasibility = feasibility;
    r.smoothed_gap = gap;
    r.tau = tau;
    r.beta = beta;
    r.gamma = gamma;
    r.restart = restart;
    r.inner_warn = inner_warn;
    if (bounds) {
      r.feas_bound = feasibility_bound(*bounds, k);
      const auto [lo, hi] = objective_bounds(*bounds, k, feasibility);
      r.obj_bound_lower = f_star + lo;
      r.obj_bound_upper = f_star + hi;
    } else {
      r.feas_bound = kNaN;
      r.obj_bound_lower = kNaN;
      r.obj_bound_upper = kNaN;
    }
    r.wallclock = std::chrono::duration<double>(Clock::now() - start).count();
    trace.rows.push_back(r);
  }
};

// y*_beta(u; ydot) specialized per target kind, reusing preallocated output.
void dual_step(const Problem& p, double beta, const std::vector<double>& ydot,
               const std::vector<double>& u, std::vector<double>& out) {
  const std::size_t m = p.m();
  switch (p.target.kind()) {
    case Target::Kind::Point: {
      const std::vector<double>& c = p.target.offset();
      for (std::size_t i = 0; i < m; ++i) out[i] = ydot[i] + (u[i] - c[i]) / beta;
      break;
    }
    case Target::Kind::Conjugate: {
      std::vector<double> z(m);
      for (std::size_t i = 0; i < m; ++i) z[i] = ydot[i] + u[i] / beta;
      p.target.gstar().prox(1.0 / beta, z, std::span<double>(out));
      break;
    }
    case Target::Kind::Cone: {
      const std::vector<double>& c = p.target.offset();
      std::vector<double> z(m);
      for (std::size_t i = 0; i < m; ++i) z[i] = ydot[i] + (u[i] - c[i]) / beta;
      if (p.target.neg_dual_cone().kind == SetKind::Point) {
        out = std::move(z);
      } else {
        project(p.target.neg_dual_cone(), z, std::span<double>(out));
      }
      break;
    }
  }
}

// prox_{rho g*}(hat + rho * v) with the point-target shortcut; used by the
// ADSGARD dual update where v = A xhat* and the offset enters through g*.
void dual_prox_step(const Problem& p, double rho, const std::vector<double>& yhat,
                    const std::vector<double>& ax, std::vector<double>& out) {
  const std::size_t m = p.m();
  switch (p.target.kind()) {
    case Target::Kind::Point: {
      const std::vector<double>& c = p.target.offset();
      for (std::size_t i = 0; i < m; ++i) out[i] = yhat[i] + rho * (ax[i] - c[i]);
      break;
    }
    case Target::Kind::Conjugate: {
      std::vector<double> z(m);
      for (std::size_t i = 0; i < m; ++i) z[i] = yhat[i] + rho * ax[i];
      p.target.gstar().prox(rho, z, std::span<double>(out));
      break;
    }
    case Target::Kind::Cone: {
      const std::vector<double>& c = p.target.offset();
      std::vector<double> z(m);
      for (std::size_t i = 0; i < m; ++i) z[i] = yhat[i] + rho * (ax[i] - c[i]);
      if (p.target.neg_dual_cone().kind == SetKind::Point) {
        out = std::move(z);
      } else {
        project(p.target.neg_dual_cone(), z, std::span<double>(out));
      }
      break;
    }
  }
}

double config_value(const std::optional<double>& v, double fallback) {
  return v.has_value() ? *v : fallback;
}

}  // namespace

SolveResult asgard_solve(const Problem& p, const SolverConfig& cfg) {
  p.validate();
  const std::size_t n = p.n(), m = p.m();
  const double la = p.l_a_bar;
  const double beta1 = config_value(cfg.beta1, 0.5 * std::sqrt(la));
  if (!(beta1 > 0)) throw std::invalid_argument("asgard: beta1 > 0 required");

  std::vector<double> ydot = p.y_center;
  std::vector<double> xbar = p.x_center;
  std::vector<double> axbar = p.a.apply(xbar);
  std::vector<double> xhat = xbar;
  std::vector<double> axhat = axbar;
  std::vector<double> ystar(m), aty(n), zprox(n), xnew(n), axnew(m);

  double tau = 1.0;     // tau_k
  double beta = beta1;  // beta_{k+1}: the value used by iteration k

  SolveResult res;
  TraceBuilder tb;
  tb.bounds = make_bound_params(p, Algorithm::Asgard, cfg, xbar, beta1, 0, 0);
  if (p.ref) tb.f_star = p.ref->f_star;
  tb.trace.algorithm = algorithm_name(Algorithm::Asgard);
  tb.trace.problem_label = p.label;
  tb.trace.params = {{"beta1", beta1},
                     {"l_a_bar", la},
                     {"max_iter", static_cast<double>(cfg.max_iter)},
                     {"restart_period",
                      cfg.restart_period ? static_cast<double>(*cfg.restart_period) : 0.0}};
  tb.trace.bounds_available = tb.bounds.has_value();
  tb.push(0, objective_of(p, xbar), feasibility_of(p, axbar), kNaN, 1.0, beta1, kNaN);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    const double tau_next = cubic_tau_root(tau, 1.0);

    dual_step(p, beta, ydot, axhat, ystar);
    p.a.apply_adjoint(std::span<const double>(ystar), std::span<double>(aty));
    const double step = beta / la;
    for (std::size_t i = 0; i < n; ++i) zprox[i] = xhat[i] - step * aty[i];
    p.f.prox(step, zprox, std::span<double>(xnew));
    p.a.apply(std::span<const double>(xnew), std::span<double>(axnew));

    const double momentum = tau_next * (1.0 - tau) / tau;
    for (std::size_t i = 0; i < n; ++i) xhat[i] = xnew[i] + momentum * (xnew[i] - xbar[i]);
    for (std::size_t i = 0; i < m; ++i) axhat[i] = axnew[i] + momentum * (axnew[i] - axbar[i]);

    const bool restart_now = cfg.restart_period && (k + 1) % *cfg.restart_period == 0;
    double beta_next;
    if (restart_now) {
      // xtilde <- xbar^{k+1}; ydot <- y*_{beta_{k+1}}(A xbar^k; ydot);
      // beta <- beta_1; tau <- 1
      dual_step(p, beta, ydot, axbar, ystar);
      ydot = ystar;
      xhat = xnew;
      axhat = axnew;
      beta_next = beta1;
    } else {
      beta_next = beta / (1.0 + tau_next);
    }

    tb.push(k + 1, objective_of(p, xnew), feasibility_of(p, axnew), kNaN, tau, beta, kNaN,
            restart_now);

    xbar = xnew;
    axbar = axnew;
    tau = restart_now ? 1.0 : tau_next;
    beta = beta_next;

    if (!all_finite(xnew)) {
      res.aborted = true;
      res.abort_row = k + 1;
      break;
    }
  }

  res.x = xbar;
  dual_step(p, beta, ydot, axbar, ystar);
  res.y = ystar;
  res.trace = std::move(tb.trace);
  return res;
}

SolveResult adsgard_solve(const Problem& p, const SolverConfig& cfg) {
  p.validate();
  const std::size_t n = p.n(), m = p.m();
  const double la = p.l_a_bar;
  const double gamma1 = config_value(cfg.gamma1, std::sqrt(la));
  if (!(gamma1 > 0)) throw std::invalid_argument("adsgard: gamma1 > 0 required");
  const double beta1 = la / gamma1;

  std::vector<double> ydot = p.y_center;
  std::vector<double> xdot = p.x_center;
  std::vector<double> xbar = p.x_center;
  std::vector<double> axbar = p.a.apply(xbar);
  std::vector<double> ybar = ydot;
  std::vector<double> ystar = ydot;  // \bar y*_0 := ydot
  std::vector<double> yhat(m), ynew(m), aty(n), zprox(n), xs(n), axs(m);

  double tau = 1.0;       // tau_k
  double gamma = gamma1;  // gamma_{k+1}
  double beta = beta1;    // beta_{k+1}
  double beta_prev = beta1;  // beta_k (unused factor at k = 0)

  Smoother bx{xdot, 1.0};
  Smoother by{ydot, 1.0};

  SolveResult res;
  TraceBuilder tb;
  tb.bounds = make_bound_params(p, Algorithm::Adsgard, cfg, xbar, 0, gamma1, 0);
  if (p.ref) tb.f_star = p.ref->f_star;
  tb.trace.algorithm = algorithm_name(Algorithm::Adsgard);
  tb.trace.problem_label = p.label;
  tb.trace.params = {{"gamma1", gamma1},
                     {"beta1", beta1},
                     {"l_a_bar", la},
                     {"max_iter", static_cast<double>(cfg.max_iter)},
                     {"restart_period",
                      cfg.restart_period ? static_cast<double>(*cfg.restart_period) : 0.0}};
  tb.trace.bounds_available = tb.bounds.has_value();
  tb.push(0, objective_of(p, xbar), feasibility_of(p, axbar), kNaN, 1.0, beta1, gamma1);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    // yhat^k = (1 - tau_k) ybar^k + tau_k ybar*_k
    kern::mix(ybar, ystar, tau, std::span<double>(yhat));

    // xhat*_{k+1} = argmin f + <A^T yhat, x> + gamma_{k+1} b_X(x, xdot)
    p.a.apply_adjoint(std::span<const double>(yhat), std::span<double>(aty));
    for (std::size_t i = 0; i < n; ++i) zprox[i] = xdot[i] - aty[i] / gamma;
    p.f.prox(1.0 / gamma, zprox, std::span<double>(xs));
    p.a.apply(std::span<const double>(xs), std::span<double>(axs));

    // ybar^{k+1} = prox_{gamma/LA g*}(yhat + gamma/LA A xhat*)
    dual_prox_step(p, gamma / la, yhat, axs, ynew);

    // xbar^{k+1} = (1 - tau_k) xbar^k + tau_k xhat*
    kern::mix(xbar, xs, tau, std::span<double>(xbar));
    kern::mix(axbar, axs, tau, std::span<double>(axbar));

    // ybar*_{k+1}: closed-form recursion for point targets, direct otherwise
    if (p.target.kind() == Target::Kind::Point) {
      const double w_prev = (1.0 - tau) * beta_prev / beta;
      const double w_new = tau * la / (gamma * beta);
      for (std::size_t i = 0; i < m; ++i) {
        ystar[i] = ydot[i] + w_prev * (ystar[i] - ydot[i]) + w_new * (ynew[i] - yhat[i]);
      }
    } else {
      dual_step(p, beta, ydot, axbar, ystar);
    }

    double gap = kNaN;
    if (k + 1 <= cfg.gap_rows) {
      const EvalResult g =
          smoothed_gap(p.f, p.a, p.target, xbar, ynew, gamma, beta, bx, by);
      if (g.evaluable) gap = g.value;
    }

    ybar = ynew;

    const bool restart_now = cfg.restart_period && (k + 1) % *cfg.restart_period == 0;
    const double tau_next = restart_now ? 1.0 : cubic_tau_root(tau, 1.0);
    tb.push(k + 1, objective_of(p, xbar), feasibility_of(p, axbar), gap, tau, beta, gamma,
            restart_now);

    if (restart_now) {
      // yhat <- ybar^{k+1}; ydot <- ybar^{k+1}; xdot <- x*_{gamma_{k+1}}(yhat^k);
      // beta <- beta_1; gamma <- gamma_1; tau <- 1
      ydot = ynew;
      ystar = ynew;
      xdot = xs;
      bx.center = xdot;
      by.center = ydot;
      beta_prev = beta1;
      beta = beta1;
      gamma = gamma1;
      tau = 1.0;
    } else {
      beta_prev = beta;
      gamma = gamma / (1.0 + tau_next);
      beta = (1.0 - tau_next) * beta;
      tau = tau_next;
    }

    if (cfg.assert_bounds && !std::isnan(gap) && !leq_with_tol(gap, 0.0)) {
      res.aborted = true;
      res.abort_row = k + 1;
      break;
    }
    if (!all_finite(xbar) || !all_finite(ybar)) {
      res.aborted = true;
      res.abort_row = k + 1;
      break;
    }
  }

  res.x = xbar;
  res.y = ybar;
  res.trace = std::move(tb.trace);
  return res;
}

namespace {

// Accelerated proximal gradient on
//   min_x f(x) + <yhat, Ax - c> + (gamma0/2) ||Ax - c||^2
// with fixed step 1/(gamma0 * LA).  Returns the prox-step iterate and its
// image under A; converged reports whether the gradient-map criterion was
// met within the budget.
struct InnerResult {
  std::vector<double> x;
  std::vector<double> ax;
  bool converged = false;
};

InnerResult augmented_lagrangian_subproblem(const Problem& p, const std::vector<double>& yhat,
                                            double gamma0, const std::vector<double>& warm,
                                            const InnerConfig& inner) {
  const std::size_t n = p.n(), m = p.m();
  const std::vector<double>& c = p.target.offset();
  const double la = p.l_a_bar;
  const double step = 1.0 / (gamma0 * la);

  std::vector<double> x = warm;
  std::vector<double> xprev = x;
  std::vector<double> z = x;
  std::vector<double> az = p.a.apply(z);
  std::vector<double> ax = az;
  std::vector<double> axprev = az;
  std::vector<double> dual(m), grad(n), zstep(n);
  double t = 1.0;
  bool converged = false;

  for (std::size_t j = 0; j < inner.max_iter; ++j) {
    for (std::size_t i = 0; i < m; ++i) dual[i] = yhat[i] + gamma0 * (az[i] - c[i]);
    p.a.apply_adjoint(std::span<const double>(dual), std::span<double>(grad));
    for (std::size_t i = 0; i < n; ++i) zstep[i] = z[i] - step * grad[i];
    xprev.swap(x);
    p.f.prox(step, zstep, std::span<double>(x));

    double move2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = z[i] - x[i];
      move2 += d * d;
    }
    axprev.swap(ax);
    p.a.apply(std::span<const double>(x), std::span<double>(ax));
    if (std::sqrt(move2) * gamma0 * la <= inner.tol) {
      converged = true;
      break;
    }

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double nu = (t - 1.0) / t_next;
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + nu * (x[i] - xprev[i]);
    for (std::size_t i = 0; i < m; ++i) az[i] = ax[i] + nu * (ax[i] - axprev[i]);
    t = t_next;
  }
  return {std::move(x), std::move(ax), converged};
}

}  // namespace

SolveResult asalgard_solve(const Problem& p, const SolverConfig& cfg) {
  p.validate();
  if (p.target.kind() != Target::Kind::Point) {
    throw std::invalid_argument("asalgard: point target required");
  }
  const std::size_t n = p.n(), m = p.m();
  const std::vector<double>& c = p.target.offset();
  const double gamma0 = config_value(cfg.gamma0, 1.0);
  if (!(gamma0 > 0)) throw std::invalid_argument("asalgard: gamma0 > 0 required");
  const double beta1 = 1.0 / gamma0;

  std::vector<double> ydot = p.y_center;
  std::vector<double> xbar = p.x_center;
  std::vector<double> axbar = p.a.apply(xbar);
  std::vector<double> ybar = p.y_center;
  std::vector<double> ystar(m), yhat(m), warm = xbar;

  double t = 1.0;            // t_k
  double beta_cur = 1.0;     // beta_0 := 1 (Algorithm 3 initialization)
  double beta_next = beta1;  // beta_1 := 1/gamma0

  SolveResult res;
  TraceBuilder tb;
  tb.bounds = make_bound_params(p, Algorithm::Asalgard, cfg, xbar, 0, 0, gamma0);
  if (p.ref) tb.f_star = p.ref->f_star;
  tb.trace.algorithm = algorithm_name(Algorithm::Asalgard);
  tb.trace.problem_label = p.label;
  tb.trace.params = {{"gamma0", gamma0},
                     {"beta1", beta1},
                     {"l_a_bar", p.l_a_bar},
                     {"inner_tol", cfg.inner.tol},
                     {"inner_max_iter", static_cast<double>(cfg.inner.max_iter)},
                     {"max_iter", static_cast<double>(cfg.max_iter)},
                     {"restart_period",
                      cfg.restart_period ? static_cast<double>(*cfg.restart_period) : 0.0}};
  tb.trace.bounds_available = tb.bounds.has_value();
  tb.push(0, objective_of(p, xbar), feasibility_of(p, axbar), kNaN, 1.0, beta_cur, gamma0);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    const double tau = 1.0 / t;

    // ybar*_k = ydot + (A xbar^k - c) / beta_k;  yhat^k mixes it with ybar^k
    for (std::size_t i = 0; i < m; ++i) ystar[i] = ydot[i] + (axbar[i] - c[i]) / beta_cur;
    kern::mix(ybar, ystar, tau, std::span<double>(yhat));

    InnerResult sub = augmented_lagrangian_subproblem(p, yhat, gamma0, warm, cfg.inner);

    for (std::size_t i = 0; i < m; ++i) ybar[i] = yhat[i] + gamma0 * (sub.ax[i] - c[i]);
    kern::mix(xbar, sub.x, tau, std::span<double>(xbar));
    kern::mix(axbar, sub.ax, tau, std::span<double>(axbar));
    warm = std::move(sub.x);

    const bool restart_now = cfg.restart_period && (k + 1) % *cfg.restart_period == 0;
    if (restart_now) {
      // ADSGARD-style reset adapted to the AL smoother: recenter the dual at
      // ybar^{k+1} and restore the (t, beta) state of a fresh start.
      ydot = ybar;
      t = 1.0;
      beta_cur = 1.0;
      beta_next = beta1;
    } else {
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      const double factor = (t_next - 1.0) / t_next;
      beta_cur = beta_next;
      beta_next = factor * beta_next;
      t = t_next;
    }

    tb.push(k + 1, objective_of(p, xbar), feasibility_of(p, axbar), kNaN, tau, beta_cur,
            gamma0, restart_now, !sub.converged);

    if (!all_finite(xbar) || !all_finite(ybar)) {
      res.aborted = true;
      res.abort_row = k + 1;
      break;
    }
  }

  res.x = xbar;
  res.y = ybar;
  res.trace = std::move(tb.trace);
  return res;
}

namespace {

// argmax_x { <u, x> - f(x) }: the unsmoothed conjugate oracle required by
// the strongly convex variant; closed form for the quadratic kind.
std::vector<double> conjugate_argmax(const ProxFn& f, const std::vector<double>& u) {
  if (f.kind() != ProxFn::Kind::Quadratic) {
    throw std::invalid_argument("adsgard_mu: closed-form conjugate requires quadratic f");
  }
  // f = (mu/2)||x - x0||^2: maximizer of <u,x> - f(x) is x0 + u/mu.
  const double mu = f.strong_convexity();
  const std::vector<double>& x0 = f.quadratic_center();
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = x0[i] + u[i] / mu;
  return out;
}

}  // namespace

SolveResult adsgard_mu_solve(const Problem& p, const SolverConfig& cfg) {
  p.validate();
  if (!(p.mu_f > 0)) throw std::invalid_argument("adsgard_mu: mu_f > 0 required");
  if (p.target.kind() != Target::Kind::Point) {
    throw std::invalid_argument("adsgard_mu: point target required");
  }
  const std::size_t n = p.n(), m = p.m();
  const std::vector<double>& c = p.target.offset();
  const double la = p.l_a_bar;
  const double mu = p.mu_f;
  const double beta1 = la / mu;

  std::vector<double> ydot = p.y_center;
  std::vector<double> xbar = p.x_center;
  std::vector<double> axbar = p.a.apply(xbar);
  std::vector<double> ybar = ydot;
  std::vector<double> ystar(m), yhat(m), negaty(n);

  double t = 1.0;            // t_k
  double beta_cur = beta1;   // unused at k = 0 (ybar*_0 := ydot)
  double beta_next = beta1;  // beta_1 := LA / mu_f

  SolveResult res;
  TraceBuilder tb;
  tb.bounds = make_bound_params(p, Algorithm::AdsgardMu, cfg, xbar, 0, 0, 0);
  if (p.ref) tb.f_star = p.ref->f_star;
  tb.trace.algorithm = algorithm_name(Algorithm::AdsgardMu);
  tb.trace.problem_label = p.label;
  tb.trace.params = {{"beta1", beta1},
                     {"mu_f", mu},
                     {"l_a_bar", la},
                     {"max_iter", static_cast<double>(cfg.max_iter)}};
  tb.trace.bounds_available = tb.bounds.has_value();
  tb.push(0, objective_of(p, xbar), feasibility_of(p, axbar), kNaN, 1.0, beta1, kNaN);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    const double tau = 1.0 / t;

    if (k == 0) {
      ystar = ydot;
    } else {
      for (std::size_t i = 0; i < m; ++i) ystar[i] = ydot[i] + (axbar[i] - c[i]) / beta_cur;
    }
    kern::mix(ybar, ystar, tau, std::span<double>(yhat));

    p.a.apply_adjoint(std::span<const double>(yhat), std::span<double>(negaty));
    for (std::size_t i = 0; i < n; ++i) negaty[i] = -negaty[i];
    const std::vector<double> xs = conjugate_argmax(p.f, negaty);
    const std::vector<double> axs = p.a.apply(xs);

    kern::mix(xbar, xs, tau, std::span<double>(xbar));
    kern::mix(axbar, axs, tau, std::span<double>(axbar));
    for (std::size_t i = 0; i < m; ++i) ybar[i] = yhat[i] + mu * (axs[i] - c[i]);

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double factor = (t_next - 1.0) / t_next;
    beta_cur = beta_next;
    beta_next = factor * beta_next;
    t = t_next;

    tb.push(k + 1, objective_of(p, xbar), feasibility_of(p, axbar), kNaN, tau, beta_cur, kNaN);

    if (!all_finite(xbar) || !all_finite(ybar)) {
      res.aborted = true;
      res.abort_row = k + 1;
      break;
    }
  }

  res.x = xbar;
  res.y = ybar;
  res.trace = std::move(tb.trace);
  return res;
}

SolveResult solve_with(Algorithm algorithm, const Problem& p, const SolverConfig& cfg) {
  SolverConfig c = cfg;
  c.algorithm = algorithm;
  switch (algorithm) {
    case Algorithm::Asgard:
      return asgard_solve(p, c);
    case Algorithm::Adsgard:
      return adsgard_solve(p, c);
    case Algorithm::Asalgard:
      return asalgard_solve(p, c);
    case Algorithm::AdsgardMu:
      return adsgard_mu_solve(p, c);
    default:
      throw std::invalid_argument("solve_with: not a smoothed-gap solver");
  }
}

}  // namespace sgr
