// NEON variants of the vector kernels (aarch64 baseline, no runtime gate needed).

#include "kernels_detail.hpp"

#ifdef VISRANK_HAVE_NEON_KERNELS

#include <arm_neon.h>

namespace visrank::kernels::detail {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vy = vld1q_f64(y + i);
        vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
        vst1q_f64(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

CosineTerms cosine_terms_neon(const double* u, const double* v, std::size_t n) {
    float64x2_t uv = vdupq_n_f64(0.0);
    float64x2_t uu = vdupq_n_f64(0.0);
    float64x2_t vv = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vu = vld1q_f64(u + i);
        const float64x2_t vw = vld1q_f64(v + i);
        uv = vfmaq_f64(uv, vu, vw);
        uu = vfmaq_f64(uu, vu, vu);
        vv = vfmaq_f64(vv, vw, vw);
    }
    CosineTerms t{vaddvq_f64(uv), vaddvq_f64(uu), vaddvq_f64(vv)};
    for (; i < n; ++i) {
        t.uv += u[i] * v[i];
        t.uu += u[i] * u[i];
        t.vv += v[i] * v[i];
    }
    return t;
}

}  // namespace visrank::kernels::detail

#endif  // VISRANK_HAVE_NEON_KERNELS
