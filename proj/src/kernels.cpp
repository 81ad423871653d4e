#include "potlab/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace potlab::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double weighted_pow_sum_scalar(const double* g2, const double* w, std::size_t n,
                               double half_p) {
  double s = 0.0;
  if (half_p == 1.0) {
    for (std::size_t i = 0; i < n; ++i) s += w[i] * g2[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) s += w[i] * std::pow(g2[i], half_p);
  }
  return s;
}

constexpr Ops kScalar{"scalar",        sum_scalar,     dot_scalar,
                      axpy_scalar,     max_abs_scalar, weighted_pow_sum_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

#ifdef POTLAB_BUILD_AVX2
const Ops& avx2_ops();  // defined in kernels_avx2.cpp
#endif

const Ops& active_ops() {
  static const Ops* selected = [] {
    const char* forced = std::getenv("POTLAB_KERNELS");
    if (forced && std::strcmp(forced, "scalar") == 0) return &kScalar;
#ifdef POTLAB_BUILD_AVX2
    const bool want_avx2 = !forced || std::strcmp(forced, "avx2") == 0;
    if (want_avx2 && __builtin_cpu_supports("avx2")) return &avx2_ops();
#endif
    return &kScalar;
  }();
  return *selected;
}

}  // namespace potlab::kernels
