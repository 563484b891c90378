#pragma once

#include "sgr/problem.hpp"

namespace sgr {

// Algorithm 1: one dual step, one primal prox step, no primal averaging.
SolveResult asgard_solve(const Problem& p, const SolverConfig& cfg);

// Algorithm 2: primal oracle step, dual prox step, weighted primal averaging.
SolveResult adsgard_solve(const Problem& p, const SolverConfig& cfg);

// Algorithm 3: augmented-Lagrangian smoothing, inner subproblem solved by
// accelerated proximal gradient.
SolveResult asalgard_solve(const Problem& p, const SolverConfig& cfg);

// Strongly convex objective variant (requires mu_f > 0 and a closed-form
// conjugate oracle for f).
SolveResult adsgard_mu_solve(const Problem& p, const SolverConfig& cfg);

SolveResult solve_with(Algorithm algorithm, const Problem& p, const SolverConfig& cfg);

// Fixed-period restart wrapper: forwards to the solver with
// cfg.restart_period = period (the reset itself runs inside the loops).
template <typename Solver>
auto with_restart(Solver solver, std::size_t period) {
  return [solver, period](const Problem& p, SolverConfig cfg) {
    cfg.restart_period = period;
    return solver(p, cfg);
  };
}

}  // namespace sgr
