#pragma once

#include "visrank/kernels.hpp"

#include <cstddef>

namespace visrank::kernels::detail {

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    CosineTerms (*cosine_terms)(const double*, const double*, std::size_t);
};

double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
CosineTerms cosine_terms_scalar(const double* u, const double* v, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
#define VISRANK_HAVE_AVX2_KERNELS 1
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
CosineTerms cosine_terms_avx2(const double* u, const double* v, std::size_t n);
#endif

#if defined(__aarch64__)
#define VISRANK_HAVE_NEON_KERNELS 1
double dot_neon(const double* x, const double* y, std::size_t n);
void axpy_neon(double a, const double* x, double* y, std::size_t n);
CosineTerms cosine_terms_neon(const double* u, const double* v, std::size_t n);
#endif

}  // namespace visrank::kernels::detail
