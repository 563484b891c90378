#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sgr {

struct NormEstimate {
  double value = 0.0;
  bool converged = false;
};

// Immutable linear operator with an adjoint.  Kernels: dense (row-major),
// row-replicated (one lead row followed by a repeated row), vertical block
// stack, identity, scaled identity.  A transposed view swaps apply and
// apply_adjoint.  Values are cheap shared handles, safe to share across
// threads; apply/apply_adjoint are pure.
class LinearOp {
 public:
  static LinearOp identity(std::size_t n);
  static LinearOp scaled_identity(std::size_t n, double s);
  static LinearOp dense(std::size_t rows, std::size_t cols, std::vector<double> row_major);
  static LinearOp dense_from_csv(const std::string& path);
  // rows: lead_row, then repeat_count copies of repeat_row.
  static LinearOp replicated(std::vector<double> lead_row, std::vector<double> repeat_row,
                             std::size_t repeat_count);
  static LinearOp block_stack(std::vector<LinearOp> children);

  std::size_t rows() const;
  std::size_t cols() const;

  LinearOp transposed() const;

  void apply(std::span<const double> x, std::span<double> y) const;
  void apply_adjoint(std::span<const double> y, std::span<double> x) const;
  std::vector<double> apply(const std::vector<double>& x) const;
  std::vector<double> apply_adjoint(const std::vector<double>& y) const;

  // Dense row-major copy (desk-scale diagnostics and oracles).
  std::vector<double> materialize() const;

  friend NormEstimate operator_norm_sq(const LinearOp& op, double tol, std::size_t max_iter);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  bool transposed_ = false;
  LinearOp(std::shared_ptr<const Impl> impl, bool transposed)
      : impl_(std::move(impl)), transposed_(transposed) {}
};

// Estimate of ||A||^2 by power iteration on A^T A, seeded deterministically.
// Stops when the relative change of successive Rayleigh quotients drops
// below tol; returns the last iterate with converged=false when the budget
// runs out.  The result is cached on the operator.
NormEstimate operator_norm_sq(const LinearOp& op, double tol = 1e-10,
                              std::size_t max_iter = 10000);

std::vector<double> parse_csv_matrix(const std::string& path, std::size_t& rows,
                                     std::size_t& cols);

}  // namespace sgr
