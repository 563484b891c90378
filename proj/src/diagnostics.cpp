#include "sgr/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace sgr {

double feasibility_bound(const BoundParams& p, std::size_t k) {
  if (k == 0) return kInf;
  const BoundRefs& r = p.refs;
  const double kk = static_cast<double>(k);
  switch (p.algorithm) {
    case Algorithm::Asgard: {
      const double inner = r.dist_y * r.dist_y + p.l_a_bar * r.dist_x0_sq / (p.beta1 * p.beta1);
      return p.beta1 / (kk + 1.0) * (r.dist_y + std::sqrt(inner));
    }
    case Algorithm::Adsgard: {
      const double inner = r.dist_y * r.dist_y + 4.0 * p.gamma1 * p.gamma1 * r.bx_xstar;
      return p.l_a_bar / (p.gamma1 * kk) * (r.dist_y + std::sqrt(inner));
    }
    case Algorithm::Asalgard:
      return 8.0 * r.dist_y / (p.gamma0 * (kk + 2.0) * (kk + 2.0));
    case Algorithm::AdsgardMu:
      return 8.0 * p.l_a_bar * r.dist_y / (p.mu_f * (kk + 2.0) * (kk + 2.0));
    default:
      throw std::invalid_argument("feasibility_bound: unknown algorithm tag");
  }
}

std::pair<double, double> objective_bounds(const BoundParams& p, std::size_t k,
                                           double measured_feasibility) {
  if (k == 0) return {-kInf, kInf};
  const BoundRefs& r = p.refs;
  const double kk = static_cast<double>(k);
  switch (p.algorithm) {
    case Algorithm::Asgard: {
      const double lower = -r.norm_ystar * measured_feasibility;
      const double upper = p.l_a_bar * r.dist_x0_sq / (2.0 * p.beta1 * kk) +
                           r.norm_ystar * measured_feasibility +
                           2.0 * p.beta1 * r.by_ystar / (kk + 1.0);
      return {lower, upper};
    }
    case Algorithm::Adsgard: {
      const double lower = -r.norm_ystar * measured_feasibility;
      const double upper = 2.0 * p.gamma1 * r.bx_xstar / (kk + 1.0) +
                           p.l_a_bar * r.by_ystar / (p.gamma1 * kk) +
                           r.norm_ystar * measured_feasibility;
      return {lower, upper};
    }
    case Algorithm::Asalgard: {
      const double denom = p.gamma0 * (kk + 2.0) * (kk + 2.0);
      return {-8.0 * r.norm_ystar * r.dist_y / denom,
              (8.0 * r.norm_ystar * r.dist_y + 4.0 * r.by_ystar) / denom};
    }
    case Algorithm::AdsgardMu: {
      const double denom = p.mu_f * (kk + 2.0) * (kk + 2.0);
      return {-8.0 * p.l_a_bar * r.norm_ystar * r.dist_y / denom,
              (8.0 * p.l_a_bar * r.norm_ystar * r.dist_y + 4.0 * r.by_ystar) / denom};
    }
    default:
      throw std::invalid_argument("objective_bounds: unknown algorithm tag");
  }
}

bool leq_with_tol(double a, double b) {
  if (std::isinf(b) && b > 0) return true;
  return a <= b + std::fabs(b) * 1e-7 + 1e-9;
}

CheckReport check_trace(const Trace& trace) {
  CheckReport report;
  for (const TraceRow& r : trace.rows) {
    const bool has_feas_bound = !std::isnan(r.feas_bound);
    const bool has_obj_bounds = !std::isnan(r.obj_bound_lower) && !std::isnan(r.obj_bound_upper);
    if (has_feas_bound) {
      report.bounds_available = true;
      if (!leq_with_tol(r.feasibility, r.feas_bound)) {
        report.violations.push_back({r.k, "feasibility", r.feasibility, r.feas_bound});
      }
    }
    if (has_obj_bounds && !std::isnan(r.objective)) {
      report.bounds_available = true;
      if (!leq_with_tol(r.objective, r.obj_bound_upper)) {
        report.violations.push_back({r.k, "objective_upper", r.objective, r.obj_bound_upper});
      }
      if (!leq_with_tol(r.obj_bound_lower, r.objective)) {
        report.violations.push_back({r.k, "objective_lower", r.objective, r.obj_bound_lower});
      }
    }
  }
  report.feasibility_loglog_slope = loglog_slope(trace, 100, 1000);
  return report;
}

double loglog_slope(const Trace& trace, std::size_t k_lo, std::size_t k_hi) {
  const TraceRow* lo = nullptr;
  const TraceRow* hi = nullptr;
  for (const TraceRow& r : trace.rows) {
    if (r.k >= k_lo && !lo) lo = &r;
    if (r.k <= k_hi) hi = &r;
  }
  if (!lo || !hi || lo->k >= hi->k) return std::nan("");
  if (!(lo->feasibility > 0) || !(hi->feasibility > 0)) return std::nan("");
  return (std::log(hi->feasibility) - std::log(lo->feasibility)) /
         (std::log(static_cast<double>(hi->k)) - std::log(static_cast<double>(lo->k)));
}

std::string report_to_json(const CheckReport& report) {
  nlohmann::json doc;
  doc["bounds_available"] = report.bounds_available;
  if (std::isnan(report.feasibility_loglog_slope)) {
    doc["feasibility_loglog_slope"] = nullptr;
  } else {
    doc["feasibility_loglog_slope"] = report.feasibility_loglog_slope;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    nlohmann::json item;
    item["row"] = v.row;
    item["quantity"] = v.quantity;
    item["measured"] = v.measured;
    item["bound"] = v.bound;
    arr.push_back(std::move(item));
  }
  doc["violations"] = std::move(arr);
  return doc.dump(2);
}

}  // namespace sgr
