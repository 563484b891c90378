#include "sgr/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>

namespace sgr::kern {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double nrm2sq_neon(const double* a, std::size_t n) { return dot_neon(a, a, n); }

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void axpby_neon(double a, const double* x, double b, const double* y, double* out,
                std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t r = vmulq_f64(va, vld1q_f64(x + i));
    r = vfmaq_f64(r, vb, vld1q_f64(y + i));
    vst1q_f64(out + i, r);
  }
  for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void mix_neon(const double* x, const double* y, double t, double* out, std::size_t n) {
  axpby_neon(1.0 - t, x, t, y, out, n);
}

void clamp_min_neon(const double* x, double lo, double* out, std::size_t n) {
  const float64x2_t vlo = vdupq_n_f64(lo);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vmaxq_f64(vld1q_f64(x + i), vlo));
  }
  for (; i < n; ++i) out[i] = x[i] < lo ? lo : x[i];
}

void clamp_max_neon(const double* x, double hi, double* out, std::size_t n) {
  const float64x2_t vhi = vdupq_n_f64(hi);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vminq_f64(vld1q_f64(x + i), vhi));
  }
  for (; i < n; ++i) out[i] = x[i] > hi ? hi : x[i];
}

void scale_neon(double alpha, const double* x, double* out, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vmulq_f64(va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) out[i] = alpha * x[i];
}

void sub_neon(const double* x, const double* y, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  }
  for (; i < n; ++i) out[i] = x[i] - y[i];
}

}  // namespace

const Table& neon_table() {
  static const Table t{dot_neon,       nrm2sq_neon,    axpy_neon,  axpby_neon, mix_neon,
                       clamp_min_neon, clamp_max_neon, scale_neon, sub_neon};
  return t;
}

}  // namespace sgr::kern

#endif
