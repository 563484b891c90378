#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgr/linops.hpp"
#include "sgr/prox.hpp"
#include "sgr/smoothing.hpp"

namespace sgr {

// Reference solution attached by problem generators; bound columns are
// emitted only when it is present (never estimated).
struct Reference {
  std::vector<double> x_star;
  std::vector<double> y_star;
  double f_star = 0.0;
};

// min_x f(x) + g(Ax) with g described by `target`.
struct Problem {
  ProxFn f;
  LinearOp a;
  Target target;
  std::vector<double> x_center;  // xdot
  std::vector<double> y_center;  // ydot
  double mu_f = 0.0;
  // Inflated operator-norm bound L_A >= ||A||^2 shared by solver steps and
  // bound evaluation.
  double l_a_bar = 0.0;
  bool norm_converged = true;
  std::optional<Reference> ref;
  std::string label;

  std::size_t n() const { return a.cols(); }
  std::size_t m() const { return a.rows(); }
  void validate() const;
};

// Builds a Problem from parts: runs the power iteration, applies the 1.01
// safety inflation, and checks dimensions.
Problem make_problem(ProxFn f, LinearOp a, Target target, std::vector<double> x_center,
                     std::vector<double> y_center, double mu_f = 0.0,
                     std::optional<Reference> ref = std::nullopt, std::string label = "");

enum class Algorithm { Asgard, Adsgard, Asalgard, AdsgardMu, ChambollePock, Admm, MultiblockAdmm };

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

struct InnerConfig {
  std::size_t max_iter = 5000;
  double tol = 1e-10;
};

struct SolverConfig {
  Algorithm algorithm = Algorithm::Asgard;
  std::optional<double> beta1;   // ASGARD
  std::optional<double> gamma1;  // ADSGARD
  std::optional<double> gamma0;  // ASALGARD
  std::size_t max_iter = 1000;
  std::optional<std::size_t> restart_period;
  InnerConfig inner;
  bool assert_bounds = false;
  // Rows 1..gap_rows of an ADSGARD run carry the smoothed gap (one extra
  // primal oracle call per row).
  std::size_t gap_rows = 0;
};

struct TraceRow {
  std::size_t k = 0;
  double objective = 0.0;
  double feasibility = 0.0;
  double smoothed_gap = 0.0;  // NaN when not computed
  double tau = 0.0;
  double beta = 0.0;
  double gamma = 0.0;  // NaN when the algorithm has none
  double feas_bound = 0.0;
  double obj_bound_lower = 0.0;
  double obj_bound_upper = 0.0;
  bool restart = false;
  bool inner_warn = false;
  double wallclock = 0.0;  // seconds since solve start; JSON only
};

struct Trace {
  std::vector<TraceRow> rows;
  std::string algorithm;
  std::string problem_label;
  std::map<std::string, double> params;  // effective config echo
  bool bounds_available = false;
};

struct SolveResult {
  std::vector<double> x;
  std::vector<double> y;
  Trace trace;
  bool aborted = false;
  std::size_t abort_row = 0;
};

}  // namespace sgr
