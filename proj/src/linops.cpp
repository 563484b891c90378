#include "sgr/linops.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "sgr/kernels.hpp"

namespace sgr {

namespace {

enum class KernelKind { Dense, Replicated, BlockStack, Identity, ScaledIdentity };

void check_len(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": expected length " +
                                std::to_string(want) + ", got " + std::to_string(got));
  }
}

// Deterministic xorshift64* stream for power-iteration seeds.
struct SeededRng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  double next_unit() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    const std::uint64_t r = state * 0x2545f4914f6cdd1dull;
    return static_cast<double>(r >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
};

}  // namespace

struct LinearOp::Impl {
  KernelKind kind;
  std::size_t rows = 0, cols = 0;
  std::vector<double> data;        // dense: row-major
  std::vector<double> lead, rep;   // replicated
  std::size_t rep_count = 0;
  double scale = 1.0;              // scaled identity
  std::vector<LinearOp> children;  // block stack

  mutable std::once_flag norm_once;
  mutable NormEstimate norm_cache;
  mutable bool norm_cached = false;

  void apply_fwd(std::span<const double> x, std::span<double> y) const {
    switch (kind) {
      case KernelKind::Identity:
        for (std::size_t i = 0; i < rows; ++i) y[i] = x[i];
        break;
      case KernelKind::ScaledIdentity:
        kern::scale(scale, x, y);
        break;
      case KernelKind::Dense:
        for (std::size_t r = 0; r < rows; ++r) {
          y[r] = kern::dot(std::span<const double>(&data[r * cols], cols), x);
        }
        break;
      case KernelKind::Replicated: {
        y[0] = kern::dot(lead, x);
        const double rv = rep_count > 0 ? kern::dot(rep, x) : 0.0;
        for (std::size_t r = 1; r < rows; ++r) y[r] = rv;
        break;
      }
      case KernelKind::BlockStack: {
        std::size_t off = 0;
        for (const LinearOp& c : children) {
          c.apply(x, y.subspan(off, c.rows()));
          off += c.rows();
        }
        break;
      }
    }
  }

  void apply_adj(std::span<const double> y, std::span<double> x) const {
    switch (kind) {
      case KernelKind::Identity:
        for (std::size_t i = 0; i < cols; ++i) x[i] = y[i];
        break;
      case KernelKind::ScaledIdentity:
        kern::scale(scale, y, x);
        break;
      case KernelKind::Dense:
        for (std::size_t i = 0; i < cols; ++i) x[i] = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
          kern::axpy(y[r], std::span<const double>(&data[r * cols], cols), x);
        }
        break;
      case KernelKind::Replicated: {
        double tail = 0.0;
        for (std::size_t r = 1; r < rows; ++r) tail += y[r];
        kern::scale(y[0], lead, x);
        if (rep_count > 0) kern::axpy(tail, rep, x);
        break;
      }
      case KernelKind::BlockStack: {
        for (std::size_t i = 0; i < cols; ++i) x[i] = 0.0;
        std::vector<double> tmp(cols);
        std::size_t off = 0;
        for (const LinearOp& c : children) {
          c.apply_adjoint(y.subspan(off, c.rows()), tmp);
          for (std::size_t i = 0; i < cols; ++i) x[i] += tmp[i];
          off += c.rows();
        }
        break;
      }
    }
  }
};

LinearOp LinearOp::identity(std::size_t n) {
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::Identity;
  impl->rows = impl->cols = n;
  return LinearOp(std::move(impl), false);
}

LinearOp LinearOp::scaled_identity(std::size_t n, double s) {
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::ScaledIdentity;
  impl->rows = impl->cols = n;
  impl->scale = s;
  return LinearOp(std::move(impl), false);
}

LinearOp LinearOp::dense(std::size_t rows, std::size_t cols, std::vector<double> row_major) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("dense: empty shape");
  check_len(row_major.size(), rows * cols, "dense data");
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::Dense;
  impl->rows = rows;
  impl->cols = cols;
  impl->data = std::move(row_major);
  return LinearOp(std::move(impl), false);
}

LinearOp LinearOp::dense_from_csv(const std::string& path) {
  std::size_t rows = 0, cols = 0;
  std::vector<double> data = parse_csv_matrix(path, rows, cols);
  return dense(rows, cols, std::move(data));
}

LinearOp LinearOp::replicated(std::vector<double> lead_row, std::vector<double> repeat_row,
                              std::size_t repeat_count) {
  if (lead_row.empty()) throw std::invalid_argument("replicated: empty lead row");
  if (repeat_count > 0) check_len(repeat_row.size(), lead_row.size(), "replicated repeat row");
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::Replicated;
  impl->rows = 1 + repeat_count;
  impl->cols = lead_row.size();
  impl->lead = std::move(lead_row);
  impl->rep = std::move(repeat_row);
  impl->rep_count = repeat_count;
  return LinearOp(std::move(impl), false);
}

LinearOp LinearOp::block_stack(std::vector<LinearOp> children) {
  if (children.empty()) throw std::invalid_argument("block_stack: no children");
  const std::size_t cols = children.front().cols();
  std::size_t rows = 0;
  for (const LinearOp& c : children) {
    if (c.cols() != cols) throw std::invalid_argument("block_stack: column mismatch");
    rows += c.rows();
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = KernelKind::BlockStack;
  impl->rows = rows;
  impl->cols = cols;
  impl->children = std::move(children);
  return LinearOp(std::move(impl), false);
}

std::size_t LinearOp::rows() const { return transposed_ ? impl_->cols : impl_->rows; }
std::size_t LinearOp::cols() const { return transposed_ ? impl_->rows : impl_->cols; }

LinearOp LinearOp::transposed() const { return LinearOp(impl_, !transposed_); }

void LinearOp::apply(std::span<const double> x, std::span<double> y) const {
  check_len(x.size(), cols(), "apply input");
  check_len(y.size(), rows(), "apply output");
  if (transposed_) {
    impl_->apply_adj(x, y);
  } else {
    impl_->apply_fwd(x, y);
  }
}

void LinearOp::apply_adjoint(std::span<const double> y, std::span<double> x) const {
  check_len(y.size(), rows(), "apply_adjoint input");
  check_len(x.size(), cols(), "apply_adjoint output");
  if (transposed_) {
    impl_->apply_fwd(y, x);
  } else {
    impl_->apply_adj(y, x);
  }
}

std::vector<double> LinearOp::apply(const std::vector<double>& x) const {
  std::vector<double> y(rows());
  apply(std::span<const double>(x), std::span<double>(y));
  return y;
}

std::vector<double> LinearOp::apply_adjoint(const std::vector<double>& y) const {
  std::vector<double> x(cols());
  apply_adjoint(std::span<const double>(y), std::span<double>(x));
  return x;
}

std::vector<double> LinearOp::materialize() const {
  std::vector<double> out(rows() * cols());
  std::vector<double> e(cols(), 0.0);
  std::vector<double> col(rows());
  for (std::size_t j = 0; j < cols(); ++j) {
    e[j] = 1.0;
    apply(std::span<const double>(e), std::span<double>(col));
    for (std::size_t i = 0; i < rows(); ++i) out[i * cols() + j] = col[i];
    e[j] = 0.0;
  }
  return out;
}

NormEstimate operator_norm_sq(const LinearOp& op, double tol, std::size_t max_iter) {
  // ||A||^2 = ||A^T||^2, so the cache is shared with transposed views.
  const LinearOp::Impl& impl = *op.impl_;
  std::call_once(impl.norm_once, [&]() {
    const std::size_t n = impl.cols;
    const std::size_t m = impl.rows;
    SeededRng rng;
    std::vector<double> v(n), av(m), w(n);
    double lambda = 0.0;
    bool converged = false;

    auto reseed = [&]() {
      for (double& vi : v) vi = rng.next_unit();
      const double nv = kern::nrm2(v);
      if (nv > 0) kern::scale(1.0 / nv, v, std::span<double>(v));
    };
    reseed();

    for (std::size_t it = 0; it < max_iter; ++it) {
      impl.apply_fwd(v, av);
      impl.apply_adj(av, w);
      const double rayleigh = kern::dot(v, w);  // v normalized: v^T A^T A v
      const double wn = kern::nrm2(w);
      if (wn <= 1e-300) {
        // landed in the null space; draw a fresh direction
        reseed();
        continue;
      }
      kern::scale(1.0 / wn, w, std::span<double>(v));
      if (it > 0 && std::fabs(rayleigh - lambda) <= tol * std::max(std::fabs(rayleigh), 1e-300)) {
        lambda = rayleigh;
        converged = true;
        break;
      }
      lambda = rayleigh;
    }
    impl.norm_cache = NormEstimate{lambda, converged};
    impl.norm_cached = true;
  });
  return impl.norm_cache;
}

std::vector<double> parse_csv_matrix(const std::string& path, std::size_t& rows,
                                     std::size_t& cols) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open csv: " + path);
  std::vector<double> data;
  rows = 0;
  cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      data.push_back(std::stod(cell));
      ++c;
    }
    if (rows == 0) {
      cols = c;
    } else if (c != cols) {
      throw std::runtime_error("csv row " + std::to_string(rows) + " has " + std::to_string(c) +
                               " cells, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw std::runtime_error("empty csv: " + path);
  return data;
}

}  // namespace sgr
