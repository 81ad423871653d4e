#pragma once

#include <functional>
#include <span>
#include <vector>

namespace potlab::quad {

struct Options {
  double abs_tol = 1e-10;
  int max_panel_depth = 40;    // adaptive bisection depth inside a smooth panel
  int max_layers = 900;        // geometric layers toward a singular endpoint
  double divergence_cap = 1e15;
};

struct Result {
  double value = 0.0;
  double error = 0.0;  // accumulated error estimate
};

// Integrates f over the bounded interval (a, b).
//
// The interval is split at the given interior points (candidate singularities
// of f, e.g. x = 0 for power densities); each piece is integrated with
// geometric panel grading toward both endpoints and an adaptive Gauss-Legendre
// rule inside every panel, so f is never evaluated at a piece endpoint.
// Integrable endpoint blow-ups are resolved by the grading; a divergent
// integral is detected from non-decaying layer contributions (or a partial sum
// beyond divergence_cap) and reported by throwing NonIntegrable.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> interior_splits = {},
                 const Options& opts = {});

}  // namespace potlab::quad
