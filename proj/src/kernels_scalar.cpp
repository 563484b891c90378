#include "sgr/kernels.hpp"

namespace sgr::kern {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double nrm2sq_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpby_scalar(double a, const double* x, double b, const double* y, double* out,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void mix_scalar(const double* x, const double* y, double t, double* out, std::size_t n) {
  const double s = 1.0 - t;
  for (std::size_t i = 0; i < n; ++i) out[i] = s * x[i] + t * y[i];
}

void clamp_min_scalar(const double* x, double lo, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] < lo ? lo : x[i];
}

void clamp_max_scalar(const double* x, double hi, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] > hi ? hi : x[i];
}

void scale_scalar(double alpha, const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = alpha * x[i];
}

void sub_scalar(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - y[i];
}

}  // namespace

const Table& scalar() {
  static const Table t{dot_scalar,       nrm2sq_scalar,    axpy_scalar,
                       axpby_scalar,     mix_scalar,       clamp_min_scalar,
                       clamp_max_scalar, scale_scalar,     sub_scalar};
  return t;
}

}  // namespace sgr::kern
