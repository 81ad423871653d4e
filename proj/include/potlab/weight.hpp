#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "potlab/exponent.hpp"

namespace potlab {

// A positive weight w on R together with the exponent p it is used with.
// Evaluation metadata (candidate singular points, a printable description)
// is carried along for the quadrature layer.
class Weight1D {
 public:
  static Weight1D constant(double c, Exponent p);
  static Weight1D power(double alpha, Exponent p);       // |x|^alpha
  static Weight1D exponential(double k, Exponent p);     // exp(k x)
  // Two-column table (x strictly increasing); piecewise-constant density with
  // the midpoint convention, extended by the edge values outside the range.
  static Weight1D table(std::vector<std::pair<double, double>> samples, Exponent p);
  static Weight1D from_density(std::function<double(double)> density, Exponent p,
                               std::vector<double> singular_hints = {},
                               std::string description = "custom");

  // Parses the weight grammar: "const c" | "pow alpha" | "exp k" | "table <path>".
  static Weight1D parse(const std::string& spec, Exponent p);

  double operator()(double x) const;

  // The dual density v = w^{1/(1-p)} of the measure nu.
  double dual_density(double x) const;

  const Exponent& exponent() const { return p_; }
  const std::vector<double>& singular_points() const { return singular_; }
  const std::string& description() const { return description_; }

 private:
  Weight1D(std::function<double(double)> density, Exponent p,
           std::vector<double> singular, std::string description);

  std::function<double(double)> density_;
  Exponent p_;
  std::vector<double> singular_;  // abscissae where w or its dual may blow up
  std::string description_;
};

}  // namespace potlab
