#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "potlab/grid.hpp"
#include "potlab/psolve.hpp"

namespace potlab {

// Dirichlet solve on a prepared grid (pins already encode the boundary data).
SolveResult dirichlet_solve(const GridDomain& g, double p,
                            const SolveOptions& opts = {});

struct PrincipleCheck {
  bool pass = true;
  std::size_t extremum_node = 0;  // location of the free-node extremum
  double free_extremum = 0.0;
  double pinned_extremum = 0.0;
};

// Pass iff the free-node maximum does not exceed the pinned maximum (+tol),
// or the field is constant within tol.
PrincipleCheck max_principle_check(const GridDomain& g,
                                   std::span<const double> values,
                                   double tol = 1e-9);
PrincipleCheck min_principle_check(const GridDomain& g,
                                   std::span<const double> values,
                                   double tol = 1e-9);

// sup/inf of a nonnegative field over nodes in B(center, radius). Requires
// the concentric ball of six times the radius to lie inside Omega. Returns
// +infinity when the infimum is not positive after tolerance clamping.
double harnack_ratio(const GridDomain& g, std::span<const double> values,
                     std::span<const double> center, double radius,
                     double tol = 1e-12);

// max - min of the field over nodes with rlo <= |x - center| <= rhi.
double annulus_oscillation(const GridDomain& g, std::span<const double> values,
                           std::span<const double> center, double rlo,
                           double rhi);

struct QuasiminCheck {
  bool pass = true;
  double worst_relative_violation = 0.0;
  int trials = 0;
};

// Energy minimality spot check: random compact-support perturbations on the
// free nodes must not lower the energy beyond the relative slack.
QuasiminCheck quasimin_spot_check(const GridDomain& g,
                                  std::span<const double> values, double p,
                                  int trials = 100,
                                  std::uint64_t seed = 0x9e3779b97f4a7c15ull,
                                  double rel_slack = 1e-9);

enum class ExperimentVerdict { RemovableConsistent, Obstructed, Inconclusive };

struct ExperimentLevel {
  double h = 0.0;
  double diff_removed = 0.0;  // full solve vs solve with E voided
  double diff_pinned = 0.0;   // full solve vs solve with E pinned
};

struct ExperimentReport {
  std::string quantity;
  std::vector<ExperimentLevel> levels;
  ExperimentVerdict verdict = ExperimentVerdict::Inconclusive;
  double contraction = 0.8;
  double floor = 1e-6;
};

struct ExperimentSpec {
  int dim = 2;
  std::vector<double> lo, hi;
  Sdf omega;
  WeightNd weight = weight_const_nd(1.0);
  BoundaryFn boundary;
  std::vector<std::vector<double>> e_points;  // E given node-wise
  Sdf e_region;                               // or as a region (optional)
  bool has_pin_value = false;
  double pin_value = 0.0;  // third-variant pin; defaults to boundary(x)
  std::vector<double> hs;  // refinement chain, coarse to fine
  double contraction = 0.8;
  double floor = 1e-6;
};

// Three solves per level: full, E voided (natural internal boundary), and E
// pinned. RemovableConsistent when the full-vs-voided sup differences
// contract by the given factor per level; Obstructed when the pinned-variant
// differences stabilize above the floor.
ExperimentReport removability_experiment(const ExperimentSpec& spec, double p,
                                         const SolveOptions& opts = {});

}  // namespace potlab
