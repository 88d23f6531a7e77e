#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace visrank::kernels {

enum class Backend { scalar, avx2, neon };

const char* name(Backend b);

// Fused single pass over u and v; feeds cosine similarity.
struct CosineTerms {
    double uv = 0.0;  // u . v
    double uu = 0.0;  // u . u
    double vv = 0.0;  // v . v
};

// x . y
double dot(std::span<const double> x, std::span<const double> y);

// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);

CosineTerms cosine_terms(std::span<const double> u, std::span<const double> v);

// Backend selection. The default is the widest backend this CPU supports,
// overridable with the VISRANK_KERNELS environment variable (scalar|avx2|neon|auto)
// read once at first use. select_backend returns false (and changes nothing)
// when the requested backend is unavailable.
Backend active_backend();
bool select_backend(Backend b);
bool select_backend(std::string_view backend_name);
std::vector<Backend> supported_backends();

}  // namespace visrank::kernels
