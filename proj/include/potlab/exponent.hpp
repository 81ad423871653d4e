#pragma once

#include <cmath>
#include <limits>

#include "potlab/errors.hpp"

namespace potlab {

// The exponent p of the p-Laplacian, 1 < p < inf, with its dual p' = p/(p-1).
class Exponent {
 public:
  explicit Exponent(double p) : p_(p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
      throw InputError("Exponent: require 1 < p < infinity");
    }
  }

  double p() const { return p_; }
  double dual() const { return p_ / (p_ - 1.0); }

  // Exponent of the dual density w^{1/(1-p)}.
  double dual_density_exponent() const { return 1.0 / (1.0 - p_); }

 private:
  double p_;
};

}  // namespace potlab
