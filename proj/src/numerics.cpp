#include "sgr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sgr {

SymmetricEig jacobi_eigh(const std::vector<double>& sym, std::size_t n) {
  if (sym.size() != n * n) throw std::invalid_argument("jacobi_eigh: size mismatch");
  std::vector<double> a = sym;
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return s;
  };

  const double eps = 1e-30;
  for (int sweep = 0; sweep < 100 && off() > eps; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::fabs(apq) < 1e-300) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  SymmetricEig out;
  out.n = n;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return out.values[i] > out.values[j]; });
  std::vector<double> vals(n);
  std::vector<double> vecs(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    vals[c] = out.values[order[c]];
    for (std::size_t r = 0; r < n; ++r) vecs[r * n + c] = v[r * n + order[c]];
  }
  out.values = std::move(vals);
  out.vectors = std::move(vecs);
  return out;
}

std::vector<double> least_norm_solve(const std::vector<double>& m, std::size_t rows,
                                     std::size_t cols, const std::vector<double>& s,
                                     double tol) {
  if (m.size() != rows * cols || s.size() != cols)
    throw std::invalid_argument("least_norm_solve: size mismatch");

  // Gram matrix G = M^T M (cols x cols).
  std::vector<double> g(cols * cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = &m[r * cols];
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) g[i * cols + j] += row[i] * row[j];
  }
  const SymmetricEig eig = jacobi_eigh(g, cols);
  const double lmax = eig.values.empty() ? 0.0 : std::max(eig.values.front(), 0.0);
  const double cutoff = lmax * 1e-12;

  // w = G^+ s via the spectral decomposition.
  std::vector<double> w(cols, 0.0);
  for (std::size_t k = 0; k < cols; ++k) {
    if (eig.values[k] <= cutoff) continue;
    double proj = 0.0;
    for (std::size_t i = 0; i < cols; ++i) proj += eig.vectors[i * cols + k] * s[i];
    proj /= eig.values[k];
    for (std::size_t i = 0; i < cols; ++i) w[i] += proj * eig.vectors[i * cols + k];
  }

  std::vector<double> y(rows, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = &m[r * cols];
    double acc = 0.0;
    for (std::size_t i = 0; i < cols; ++i) acc += row[i] * w[i];
    y[r] = acc;
  }

  // Verify M^T y = s.
  std::vector<double> check(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = &m[r * cols];
    for (std::size_t i = 0; i < cols; ++i) check[i] += row[i] * y[r];
  }
  double resid = 0.0, snorm = 0.0;
  for (std::size_t i = 0; i < cols; ++i) {
    resid += (check[i] - s[i]) * (check[i] - s[i]);
    snorm += s[i] * s[i];
  }
  if (std::sqrt(resid) > tol * (1.0 + std::sqrt(snorm)))
    throw std::runtime_error("least_norm_solve: rhs not in range, residual " +
                             std::to_string(std::sqrt(resid)));
  return y;
}

}  // namespace sgr
