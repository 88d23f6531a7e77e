// AVX2+FMA variants of the vector kernels. Built with -mavx2 -mfma; callers
// must gate on runtime CPU support (kernels.cpp does).

#include "kernels_detail.hpp"

#ifdef VISRANK_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace visrank::kernels::detail {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

CosineTerms cosine_terms_avx2(const double* u, const double* v, std::size_t n) {
    __m256d uv = _mm256_setzero_pd();
    __m256d uu = _mm256_setzero_pd();
    __m256d vv = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vu = _mm256_loadu_pd(u + i);
        const __m256d vw = _mm256_loadu_pd(v + i);
        uv = _mm256_fmadd_pd(vu, vw, uv);
        uu = _mm256_fmadd_pd(vu, vu, uu);
        vv = _mm256_fmadd_pd(vw, vw, vv);
    }
    CosineTerms t{hsum(uv), hsum(uu), hsum(vv)};
    for (; i < n; ++i) {
        t.uv += u[i] * v[i];
        t.uu += u[i] * u[i];
        t.vv += v[i] * v[i];
    }
    return t;
}

}  // namespace visrank::kernels::detail

#endif  // VISRANK_HAVE_AVX2_KERNELS
