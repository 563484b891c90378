#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sgr::kern {

// Dispatch table for the dense vector kernels that dominate solver runtime.
// `scalar()` is the portable reference; `active()` is the variant picked at
// startup from CPU capabilities (AVX2 on x86-64, NEON on aarch64).  Both
// tables compute the same quantities; SIMD variants may reassociate sums,
// so results agree to rounding, not bitwise.
struct Table {
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*nrm2sq)(const double* a, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out = a*x + b*y
  void (*axpby)(double a, const double* x, double b, const double* y, double* out, std::size_t n);
  // out = (1-t)*x + t*y
  void (*mix)(const double* x, const double* y, double t, double* out, std::size_t n);
  // out = max(x, lo) componentwise
  void (*clamp_min)(const double* x, double lo, double* out, std::size_t n);
  // out = min(x, hi) componentwise
  void (*clamp_max)(const double* x, double hi, double* out, std::size_t n);
  void (*scale)(double alpha, const double* x, double* out, std::size_t n);
  void (*sub)(const double* x, const double* y, double* out, std::size_t n);
};

const Table& scalar();
const Table& active();
const char* active_name();

// span wrappers over the active table
inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline double nrm2sq(std::span<const double> a) { return active().nrm2sq(a.data(), a.size()); }
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
                  std::span<double> out) {
  active().axpby(a, x.data(), b, y.data(), out.data(), x.size());
}
inline void mix(std::span<const double> x, std::span<const double> y, double t,
                std::span<double> out) {
  active().mix(x.data(), y.data(), t, out.data(), x.size());
}
inline void clamp_min(std::span<const double> x, double lo, std::span<double> out) {
  active().clamp_min(x.data(), lo, out.data(), x.size());
}
inline void clamp_max(std::span<const double> x, double hi, std::span<double> out) {
  active().clamp_max(x.data(), hi, out.data(), x.size());
}
inline void scale(double alpha, std::span<const double> x, std::span<double> out) {
  active().scale(alpha, x.data(), out.data(), x.size());
}
inline void sub(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  active().sub(x.data(), y.data(), out.data(), x.size());
}

inline double nrm2(std::span<const double> a);

}  // namespace sgr::kern

#include <cmath>
namespace sgr::kern {
inline double nrm2(std::span<const double> a) { return std::sqrt(nrm2sq(a)); }
}  // namespace sgr::kern
