// AVX2 variants of the grid-solver kernels. Four independent accumulator
// lanes, combined in a fixed order so results are reproducible per run.

#include <immintrin.h>

#include <cmath>

#include "potlab/kernels.hpp"

namespace potlab::kernels {
namespace {

inline double hsum(__m256d v) {
  // Fixed order: lane0 + lane1 + lane2 + lane3.
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                           _mm256_loadu_pd(y + i)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_add_pd(vy, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double max_abs_avx2(const double* x, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double weighted_pow_sum_avx2(const double* g2, const double* w, std::size_t n,
                             double half_p) {
  if (half_p != 1.0) {
    // General exponents take the scalar pow path.
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * std::pow(g2[i], half_p);
    return s;
  }
  return dot_avx2(g2, w, n);
}

constexpr Ops kAvx2{"avx2",    sum_avx2,      dot_avx2,
                    axpy_avx2, max_abs_avx2,  weighted_pow_sum_avx2};

}  // namespace

const Ops& avx2_ops() { return kAvx2; }

}  // namespace potlab::kernels
