#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "potlab/grid.hpp"
#include "potlab/psolve.hpp"

namespace potlab {

// Condenser: plate pinned to 1 inside omega, exterior boundary pinned to 0.
struct CondenserSpec {
  int dim = 2;
  std::vector<double> lo, hi;
  Sdf omega;
  Sdf plate;                                    // optional region plate
  std::vector<std::vector<double>> plate_points;  // nodes pinned individually
  WeightNd weight = weight_const_nd(1.0);
};

struct CapacityEstimate {
  double value = 0.0;
  double h = 0.0;
  int iterations = 0;
  std::vector<double> energy_history;
  std::vector<std::pair<double, double>> refinement_chain;  // (h, value)
};

CapacityEstimate variational_capacity(const CondenserSpec& spec, double h,
                                      double p, const SolveOptions& opts = {});

// Runs the condenser at each spacing and collects the (h, value) chain into
// the finest estimate.
CapacityEstimate capacity_refinement(const CondenserSpec& spec,
                                     std::vector<double> hs, double p,
                                     const SolveOptions& opts = {});

enum class CapTrend { TrendZero, TrendPositive, Inconclusive };

struct TrendOptions {
  double rho = 0.8;             // contraction bound for TrendZero
  double stabilize_tol = 0.05;  // relative agreement for TrendPositive
  double floor = 1e-9;          // values below this never count as Positive
};

// chain: (h, value) with strictly decreasing h, length >= 3.
CapTrend null_capacity_trend(const std::vector<std::pair<double, double>>& chain,
                             const TrendOptions& opts = {});

// Volume growth of balls at the origin: either an exact power law
// mu(B(0,r)) = c * r^d or an arbitrary closed-form r -> mu(B(0,r)).
struct BallGrowth {
  bool is_power_law = false;
  double c = 1.0, d = 0.0;
  std::function<double(double)> mu;

  static BallGrowth power_law(double c, double d);
  static BallGrowth closed_form(std::function<double(double)> mu);
  double operator()(double r) const;
};

enum class Parabolicity { Parabolic, Hyperbolic, Inconclusive };

// Divergence test of the growth integral of (r / mu(B(0,r)))^{1/(p-1)} over
// r in [1, infinity). Power laws are decided exactly: Parabolic iff p >= d.
Parabolicity parabolicity(const BallGrowth& growth, double p);

}  // namespace potlab
