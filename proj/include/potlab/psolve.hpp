#pragma once

#include <span>
#include <vector>

#include "potlab/grid.hpp"

namespace potlab {

struct SolveOptions {
  double grad_tol_factor = 1e-8;  // tolerance = factor * initial energy scale
  int max_iter = 100000;
  double epsilon = 1e-8;          // gradient regularization for p < 2
  int anneal_rounds = 2;          // epsilon *= 0.1 per round after convergence
  bool record_history = true;
};

struct SolveResult {
  std::vector<double> values;          // one per node; pinned values exact
  std::vector<double> energy_history;  // nonincreasing
  int iterations = 0;
  bool converged = false;
  double grad_max = 0.0;
  double energy = 0.0;
  bool within_pinned_hull = true;      // free values inside [min pin, max pin]
};

// Discrete p-energy: sum over cells of |grad_h u|^p * w_cell * h^dim, with
// forward differences per cell. Only differences between valued nodes enter.
double p_energy(const GridDomain& g, std::span<const double> values, double p,
                double epsilon = 0.0);

// Max-norm of the energy gradient over free nodes.
double p_energy_grad_max(const GridDomain& g, std::span<const double> values,
                         double p, double epsilon = 0.0);

// Minimizes the discrete p-energy over free nodes with pinned values held
// exactly (nonlinear conjugate gradient with a monotone line search).
SolveResult minimize_energy(const GridDomain& g, double p,
                            const SolveOptions& opts = {});

}  // namespace potlab
