#include "potlab/psolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "potlab/errors.hpp"
#include "potlab/kernels.hpp"

namespace potlab {
namespace {

struct Cells {
  std::vector<std::size_t> base;
  std::vector<std::uint8_t> axes;  // bitmask of axes with a valued forward pair
  std::vector<double> weight;
};

Cells collect_cells(const GridDomain& g) {
  Cells cells;
  const int dim = g.dim();
  const auto& npa = g.nodes_per_axis();
  const std::size_t total = g.node_count();
  std::vector<int> multi(dim);
  for (std::size_t i = 0; i < total; ++i) {
    if (!g.valued(i)) continue;
    std::size_t rem = i;
    bool interior = true;
    for (int a = 0; a < dim; ++a) {
      multi[a] = static_cast<int>(rem % npa[a]);
      rem /= npa[a];
      if (multi[a] + 1 >= npa[a]) interior = false;
    }
    if (!interior) continue;  // only full cells carry a weight sample
    std::uint8_t mask = 0;
    for (int a = 0; a < dim; ++a) {
      if (g.valued(i + g.stride(a))) mask |= static_cast<std::uint8_t>(1u << a);
    }
    if (mask == 0) continue;
    cells.base.push_back(i);
    cells.axes.push_back(mask);
    cells.weight.push_back(g.cell_weight(i));
  }
  return cells;
}

// Fills g2[k] = |grad_h u|^2 + eps^2 on cell k.
void cell_grad_sq(const GridDomain& g, const Cells& cells,
                  std::span<const double> v, double eps,
                  std::vector<double>& g2) {
  const double inv_h = 1.0 / g.h();
  const double e2 = eps * eps;
  g2.resize(cells.base.size());
  for (std::size_t k = 0; k < cells.base.size(); ++k) {
    const std::size_t b = cells.base[k];
    double s = e2;
    std::uint8_t mask = cells.axes[k];
    for (int a = 0; mask; ++a, mask >>= 1) {
      if (mask & 1u) {
        const double d = (v[b + g.stride(a)] - v[b]) * inv_h;
        s += d * d;
      }
    }
    g2[k] = s;
  }
}

double energy_of(const GridDomain& g, const Cells& cells,
                 std::span<const double> v, double p, double eps,
                 std::vector<double>& g2) {
  cell_grad_sq(g, cells, v, eps, g2);
  const double cell_measure = std::pow(g.h(), g.dim());
  return kernels::active_ops().weighted_pow_sum(g2.data(), cells.weight.data(),
                                                g2.size(), 0.5 * p) *
         cell_measure;
}

void gradient_of(const GridDomain& g, const Cells& cells,
                 std::span<const double> v, double p, double eps,
                 std::vector<double>& g2, std::vector<double>& grad) {
  cell_grad_sq(g, cells, v, eps, g2);
  const double inv_h = 1.0 / g.h();
  const double cell_measure = std::pow(g.h(), g.dim());
  grad.assign(g.node_count(), 0.0);
  for (std::size_t k = 0; k < cells.base.size(); ++k) {
    const std::size_t b = cells.base[k];
    const double f =
        p * std::pow(g2[k], 0.5 * p - 1.0) * cells.weight[k] * cell_measure;
    std::uint8_t mask = cells.axes[k];
    for (int a = 0; mask; ++a, mask >>= 1) {
      if (mask & 1u) {
        const std::size_t nb = b + g.stride(a);
        const double t = f * (v[nb] - v[b]) * inv_h * inv_h;
        grad[nb] += t;
        grad[b] -= t;
      }
    }
  }
}

}  // namespace

double p_energy(const GridDomain& g, std::span<const double> values, double p,
                double epsilon) {
  if (!(p > 1.0)) throw InputError("p_energy: require p > 1");
  const Cells cells = collect_cells(g);
  std::vector<double> g2;
  return energy_of(g, cells, values, p, epsilon, g2);
}

double p_energy_grad_max(const GridDomain& g, std::span<const double> values,
                         double p, double epsilon) {
  const Cells cells = collect_cells(g);
  std::vector<double> g2, grad;
  gradient_of(g, cells, values, p, epsilon, g2, grad);
  double m = 0.0;
  for (std::size_t i : g.free_nodes()) m = std::max(m, std::abs(grad[i]));
  return m;
}

SolveResult minimize_energy(const GridDomain& g, double p,
                            const SolveOptions& opts) {
  if (!(p > 1.0)) throw InputError("minimize_energy: require p > 1");
  if (!g.has_pinned()) {
    throw InputError("minimize_energy: at least one pinned node required");
  }
  const auto& ops = kernels::active_ops();
  const Cells cells = collect_cells(g);
  const auto& free = g.free_nodes();
  const std::size_t nf = free.size();

  SolveResult res;
  res.values.assign(g.node_count(), 0.0);
  double pin_min = std::numeric_limits<double>::infinity();
  double pin_max = -pin_min;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.node_class(i) == GridDomain::Pinned) {
      res.values[i] = g.pin_value(i);
      pin_min = std::min(pin_min, res.values[i]);
      pin_max = std::max(pin_max, res.values[i]);
    }
  }
  const double pin_mid = 0.5 * (pin_min + pin_max);
  for (std::size_t i : free) res.values[i] = pin_mid;

  double eps = (p < 2.0) ? opts.epsilon : 0.0;
  const int rounds = (p < 2.0) ? 1 + opts.anneal_rounds : 1;

  std::vector<double> g2, grad_full, trial(res.values.size());
  std::vector<double> gvec(nf), gnew(nf), dir(nf);

  double energy = energy_of(g, cells, res.values, p, eps, g2);
  const double tol = opts.grad_tol_factor * std::max(energy, 1e-12);
  if (opts.record_history) res.energy_history.push_back(energy);

  auto free_grad = [&](std::vector<double>& out) {
    gradient_of(g, cells, res.values, p, eps, g2, grad_full);
    for (std::size_t k = 0; k < nf; ++k) out[k] = grad_full[free[k]];
  };
  auto phi = [&](double alpha) {
    std::copy(res.values.begin(), res.values.end(), trial.begin());
    for (std::size_t k = 0; k < nf; ++k) trial[free[k]] += alpha * dir[k];
    return energy_of(g, cells, trial, p, eps, g2);
  };

  int iters = 0;
  for (int round = 0; round < rounds; ++round) {
    if (round > 0) {
      eps *= 0.1;
      energy = energy_of(g, cells, res.values, p, eps, g2);
    }
    free_grad(gvec);
    res.grad_max = ops.max_abs(gvec.data(), nf);
    for (std::size_t k = 0; k < nf; ++k) dir[k] = -gvec[k];
    double prev_alpha = 0.0;
    bool steepest = true;

    while (res.grad_max > tol && iters < opts.max_iter) {
      double slope = ops.dot(gvec.data(), dir.data(), nf);
      if (!(slope < 0.0)) {
        for (std::size_t k = 0; k < nf; ++k) dir[k] = -gvec[k];
        slope = -ops.dot(gvec.data(), gvec.data(), nf);
        steepest = true;
        if (!(slope < 0.0)) break;  // zero gradient
      }
      // Quadratic model through (0, E) and one trial point sets the step.
      const double dmax = ops.max_abs(dir.data(), nf);
      double alpha_t = prev_alpha > 0.0 ? prev_alpha : 1.0 / std::max(dmax, 1e-30);
      double e_t = phi(alpha_t);
      double alpha = alpha_t;
      const double q = (e_t - energy - slope * alpha_t) / (alpha_t * alpha_t);
      if (q > 0.0) {
        alpha = std::clamp(-0.5 * slope / q, 1e-6 * alpha_t, 1e6 * alpha_t);
      }
      double e_new = (alpha == alpha_t) ? e_t : phi(alpha);
      int backtracks = 0;
      while (e_new > energy + 1e-4 * alpha * slope && backtracks < 60) {
        alpha *= 0.5;
        e_new = phi(alpha);
        ++backtracks;
      }
      if (!(e_new < energy)) {  // no strict decrease: stalled
        if (!steepest) {  // retry from steepest descent
          for (std::size_t k = 0; k < nf; ++k) dir[k] = -gvec[k];
          steepest = true;
          prev_alpha = 0.0;
          continue;
        }
        break;  // no further monotone progress possible
      }
      for (std::size_t k = 0; k < nf; ++k) res.values[free[k]] += alpha * dir[k];
      energy = e_new;
      prev_alpha = alpha;
      ++iters;
      if (opts.record_history) res.energy_history.push_back(energy);

      free_grad(gnew);
      res.grad_max = ops.max_abs(gnew.data(), nf);
      // Polak-Ribiere (nonnegative) restartable update.
      const double gg = ops.dot(gvec.data(), gvec.data(), nf);
      double num = 0.0;
      for (std::size_t k = 0; k < nf; ++k) num += gnew[k] * (gnew[k] - gvec[k]);
      const double beta = (gg > 0.0) ? std::max(0.0, num / gg) : 0.0;
      for (std::size_t k = 0; k < nf; ++k) dir[k] = -gnew[k] + beta * dir[k];
      gvec.swap(gnew);
      steepest = (beta == 0.0);
    }
  }

  res.iterations = iters;
  res.energy = energy;
  res.converged = res.grad_max <= tol;
  if (nf > 0 && pin_max >= pin_min) {
    const double slack = 1e-6 * std::max(1.0, pin_max - pin_min);
    for (std::size_t i : free) {
      if (res.values[i] < pin_min - slack || res.values[i] > pin_max + slack) {
        res.within_pinned_hull = false;
        break;
      }
    }
  }
  return res;
}

}  // namespace potlab
