#pragma once

#include <cstddef>
#include <vector>

namespace sgr {

// Desk-scale dense symmetric eigendecomposition (cyclic Jacobi).
// Returns eigenvalues in `values` (descending) and matching eigenvectors as
// the columns of `vectors` (row-major n x n).  Intended for small n; used to
// certify operator norms and to solve rank-deficient KKT systems when
// generating reference solutions.
struct SymmetricEig {
  std::vector<double> values;
  std::vector<double> vectors;
  std::size_t n = 0;
};

SymmetricEig jacobi_eigh(const std::vector<double>& sym_rowmajor, std::size_t n);

// Minimum-norm y solving  M^T y = s  for a dense rows x cols matrix M
// (row-major).  Solves the normal system (M^T M) w = s through the
// eigen-pseudoinverse and returns y = M w.  Requires s in range(M^T);
// throws std::runtime_error when the residual of the reconstructed
// solution exceeds `tol`.
std::vector<double> least_norm_solve(const std::vector<double>& m_rowmajor, std::size_t rows,
                                     std::size_t cols, const std::vector<double>& s,
                                     double tol = 1e-9);

}  // namespace sgr
