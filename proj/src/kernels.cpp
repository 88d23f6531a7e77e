#include "visrank/kernels.hpp"

#include "kernels_detail.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

namespace visrank::kernels {
namespace {

using detail::Ops;

constexpr Ops kScalarOps{detail::dot_scalar, detail::axpy_scalar, detail::cosine_terms_scalar};
#ifdef VISRANK_HAVE_AVX2_KERNELS
constexpr Ops kAvx2Ops{detail::dot_avx2, detail::axpy_avx2, detail::cosine_terms_avx2};
#endif
#ifdef VISRANK_HAVE_NEON_KERNELS
constexpr Ops kNeonOps{detail::dot_neon, detail::axpy_neon, detail::cosine_terms_neon};
#endif

struct Entry {
    Backend backend;
    const Ops* ops;
};

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#ifdef VISRANK_HAVE_AVX2_KERNELS
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::neon:
#ifdef VISRANK_HAVE_NEON_KERNELS
            return true;  // baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

const Ops* ops_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return &kScalarOps;
#ifdef VISRANK_HAVE_AVX2_KERNELS
        case Backend::avx2:
            return &kAvx2Ops;
#endif
#ifdef VISRANK_HAVE_NEON_KERNELS
        case Backend::neon:
            return &kNeonOps;
#endif
        default:
            return nullptr;
    }
}

Backend widest_supported() {
#ifdef VISRANK_HAVE_AVX2_KERNELS
    if (backend_available(Backend::avx2)) return Backend::avx2;
#endif
#ifdef VISRANK_HAVE_NEON_KERNELS
    if (backend_available(Backend::neon)) return Backend::neon;
#endif
    return Backend::scalar;
}

bool parse_backend(std::string_view s, Backend& out) {
    if (s == "scalar") out = Backend::scalar;
    else if (s == "avx2") out = Backend::avx2;
    else if (s == "neon") out = Backend::neon;
    else return false;
    return true;
}

Entry initial_entry() {
    Backend b = widest_supported();
    if (const char* env = std::getenv("VISRANK_KERNELS")) {
        std::string_view v(env);
        if (v != "auto" && !v.empty()) {
            Backend requested;
            if (parse_backend(v, requested) && backend_available(requested)) {
                b = requested;
            } else {
                std::cerr << "visrank: VISRANK_KERNELS=" << v
                          << " not available, using " << name(b) << "\n";
            }
        }
    }
    return Entry{b, ops_for(b)};
}

std::atomic<const Ops*>& active_ops_slot() {
    static Entry entry = initial_entry();
    static std::atomic<const Ops*> slot{entry.ops};
    return slot;
}

std::atomic<Backend>& active_backend_slot() {
    static Entry entry = initial_entry();
    static std::atomic<Backend> slot{entry.backend};
    return slot;
}

const Ops& active() { return *active_ops_slot().load(std::memory_order_acquire); }

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b) throw std::domain_error("vector dimension mismatch");
}

}  // namespace

const char* name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "?";
}

double dot(std::span<const double> x, std::span<const double> y) {
    check_sizes(x.size(), y.size());
    return active().dot(x.data(), y.data(), x.size());
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    check_sizes(x.size(), y.size());
    active().axpy(a, x.data(), y.data(), x.size());
}

CosineTerms cosine_terms(std::span<const double> u, std::span<const double> v) {
    check_sizes(u.size(), v.size());
    return active().cosine_terms(u.data(), v.data(), u.size());
}

Backend active_backend() { return active_backend_slot().load(std::memory_order_acquire); }

bool select_backend(Backend b) {
    if (!backend_available(b)) return false;
    active_ops_slot().store(ops_for(b), std::memory_order_release);
    active_backend_slot().store(b, std::memory_order_release);
    return true;
}

bool select_backend(std::string_view backend_name) {
    Backend b;
    if (!parse_backend(backend_name, b)) return false;
    return select_backend(b);
}

std::vector<Backend> supported_backends() {
    std::vector<Backend> out{Backend::scalar};
    if (backend_available(Backend::avx2)) out.push_back(Backend::avx2);
    if (backend_available(Backend::neon)) out.push_back(Backend::neon);
    return out;
}

namespace detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

CosineTerms cosine_terms_scalar(const double* u, const double* v, std::size_t n) {
    CosineTerms t;
    for (std::size_t i = 0; i < n; ++i) {
        t.uv += u[i] * v[i];
        t.uu += u[i] * u[i];
        t.vv += v[i] * v[i];
    }
    return t;
}

}  // namespace detail
}  // namespace visrank::kernels
