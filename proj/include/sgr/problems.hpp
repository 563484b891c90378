#pragma once

#include <cstddef>
#include <vector>

#include "sgr/problem.hpp"

namespace sgr {

// min 2 x_n  s.t.  sum_{k<n} x_k = 1,  (x_n - sum_{k<n} x_k = 0) repeated
// d-1 times,  x_n >= 0.  The repeated rows make the program degenerate.
// Reference: canonical x* (uniform first block, x_n = 1 when d >= 2) and
// the minimum-norm dual multiplier, certified by a KKT check at build time.
Problem degenerate_lp(std::size_t n, std::size_t d);

// The paper's half-space / hyperplane constructors, parameterized by eps:
//   X1 = { y : eps y_1 - sum_{j>=2} y_j <= 1 }
//   X2 = { y : sum_{j>=2} y_j <= -1 }
//   X3 = { y : 0.5 eps y_1 - sum_{j>=2} y_j = 1 }
//   X4 = { y : -y_1 + sum_{j>=3} y_j <= 1 }
std::vector<SetSpec> feasibility_sets(std::size_t num_sets, double eps, std::size_t n);

// min sum_i s_{X_i}(x_i)  s.t.  sum_i x_i = 0, with per-block support
// functions; dual problem: find y in the intersection of the X_i.
Problem feasibility_problem(const std::vector<SetSpec>& sets, std::size_t n);

// General cone-constrained problem: min f(x) s.t. Ax - c in K.
Problem cone_problem(ProxFn f, LinearOp a, std::vector<double> c, SetSpec cone_k);

// min (mu/2) ||x - x0||^2  s.t.  <a, x> = b, with the closed-form solution
// attached (used by the strongly convex variant).
Problem equality_qp(std::vector<double> x0, std::vector<double> a_row, double b, double mu = 1.0);

}  // namespace sgr
