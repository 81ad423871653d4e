#pragma once

#include <cstddef>
#include <string>

namespace potlab::kernels {

// Hot inner loops of the grid solver. Every entry has a scalar reference
// implementation; wider variants are selected once at startup from CPU
// features and must agree with the reference to 1e-12 relative (equivalence
// tests enforce this). All reductions use a fixed combination order, so a
// given variant is bitwise reproducible run to run.
struct Ops {
  const char* name;
  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  // sum_i w[i] * g2[i]^half_p  (the p-energy reduction; g2 holds |grad|^2).
  double (*weighted_pow_sum)(const double* g2, const double* w, std::size_t n,
                             double half_p);
};

const Ops& scalar_ops();

// The runtime-selected variant (honors POTLAB_KERNELS=scalar|avx2 if set).
const Ops& active_ops();

}  // namespace potlab::kernels
