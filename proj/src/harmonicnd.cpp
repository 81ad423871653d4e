#include "potlab/harmonicnd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "potlab/errors.hpp"

namespace potlab {
namespace {

double node_distance(const GridDomain& g, std::size_t i,
                     std::span<const double> center) {
  std::vector<double> x(g.dim());
  g.coords(i, x);
  double r2 = 0.0;
  for (int a = 0; a < g.dim(); ++a) {
    const double d = x[a] - center[a];
    r2 += d * d;
  }
  return std::sqrt(r2);
}

}  // namespace

SolveResult dirichlet_solve(const GridDomain& g, double p,
                            const SolveOptions& opts) {
  SolveResult res = minimize_energy(g, p, opts);
  if (!res.converged) {
    throw NoConvergence("dirichlet_solve: grad_max=" +
                        std::to_string(res.grad_max) + " after " +
                        std::to_string(res.iterations) + " iterations");
  }
  return res;
}

namespace {

PrincipleCheck principle_check(const GridDomain& g,
                               std::span<const double> values, double tol,
                               bool maximum) {
  const double sgn = maximum ? 1.0 : -1.0;
  PrincipleCheck c;
  double free_ext = -std::numeric_limits<double>::infinity();
  double pin_ext = -std::numeric_limits<double>::infinity();
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!g.valued(i)) continue;
    const double v = values[i];
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
    const double s = sgn * v;
    if (g.node_class(i) == GridDomain::Free) {
      if (s > free_ext) {
        free_ext = s;
        c.extremum_node = i;
      }
    } else if (s > pin_ext) {
      pin_ext = s;
    }
  }
  c.free_extremum = sgn * free_ext;
  c.pinned_extremum = sgn * pin_ext;
  c.pass = (vmax - vmin <= tol) || (free_ext <= pin_ext + tol);
  return c;
}

}  // namespace

PrincipleCheck max_principle_check(const GridDomain& g,
                                   std::span<const double> values, double tol) {
  return principle_check(g, values, tol, true);
}

PrincipleCheck min_principle_check(const GridDomain& g,
                                   std::span<const double> values, double tol) {
  return principle_check(g, values, tol, false);
}

double harnack_ratio(const GridDomain& g, std::span<const double> values,
                     std::span<const double> center, double radius,
                     double tol) {
  if (!(radius > 0.0)) throw InputError("harnack_ratio: radius must be positive");
  double sup = -std::numeric_limits<double>::infinity();
  double inf = std::numeric_limits<double>::infinity();
  bool hit = false;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const double r = node_distance(g, i, center);
    if (r <= 6.0 * radius && g.node_class(i) != GridDomain::Free) {
      throw BallTooLarge("harnack_ratio: 6B leaves the domain at node " +
                         std::to_string(i));
    }
    if (r <= radius) {
      hit = true;
      sup = std::max(sup, values[i]);
      inf = std::min(inf, values[i]);
    }
  }
  if (!hit) throw InputError("harnack_ratio: no nodes inside the ball");
  if (inf < -tol) throw InputError("harnack_ratio: field is not nonnegative");
  if (inf <= tol) return std::numeric_limits<double>::infinity();
  return sup / inf;
}

double annulus_oscillation(const GridDomain& g, std::span<const double> values,
                           std::span<const double> center, double rlo,
                           double rhi) {
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!g.valued(i)) continue;
    const double r = node_distance(g, i, center);
    if (r < rlo || r > rhi) continue;
    vmin = std::min(vmin, values[i]);
    vmax = std::max(vmax, values[i]);
  }
  if (vmax < vmin) return 0.0;  // empty annulus
  return vmax - vmin;
}

QuasiminCheck quasimin_spot_check(const GridDomain& g,
                                  std::span<const double> values, double p,
                                  int trials, std::uint64_t seed,
                                  double rel_slack) {
  QuasiminCheck check;
  check.trials = trials;
  const auto& free = g.free_nodes();
  if (free.empty()) return check;

  const double e0 = p_energy(g, values, p);
  const double scale = std::max(e0, 1e-12);
  std::vector<double> perturbed(values.begin(), values.end());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-0.1, 0.1);
  std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);

  for (int t = 0; t < trials; ++t) {
    // Small random bump on a random subset of free nodes.
    const std::size_t touched = 1 + pick(rng) % std::max<std::size_t>(free.size() / 4, 1);
    std::vector<std::size_t> idx(touched);
    for (auto& k : idx) k = free[pick(rng)];
    for (std::size_t k : idx) perturbed[k] += amp(rng);
    const double e1 = p_energy(g, perturbed, p);
    for (std::size_t k : idx) perturbed[k] = values[k];
    const double violation = (e0 - e1) / scale;
    check.worst_relative_violation =
        std::max(check.worst_relative_violation, violation);
  }
  check.pass = check.worst_relative_violation <= rel_slack;
  return check;
}

namespace {

GridDomain build_grid(const ExperimentSpec& spec, double h) {
  return GridDomain(spec.dim, spec.lo, spec.hi, h, spec.omega, spec.weight,
                    spec.boundary);
}

std::vector<std::size_t> e_nodes_on(const GridDomain& g,
                                    const ExperimentSpec& spec) {
  std::vector<std::size_t> nodes;
  for (const auto& pt : spec.e_points) {
    const std::size_t i = g.nearest_node(pt);
    if (g.node_class(i) == GridDomain::Free) nodes.push_back(i);
  }
  if (spec.e_region) {
    std::vector<double> x(g.dim());
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      if (g.node_class(i) != GridDomain::Free) continue;
      g.coords(i, x);
      if (spec.e_region(x) <= 0.0) nodes.push_back(i);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

double sup_diff_outside(const GridDomain& g, std::span<const double> a,
                        std::span<const double> b,
                        const std::vector<std::size_t>& excluded) {
  double d = 0.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    while (k < excluded.size() && excluded[k] < i) ++k;
    if (k < excluded.size() && excluded[k] == i) continue;
    if (g.node_class(i) != GridDomain::Free) continue;
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

}  // namespace

ExperimentReport removability_experiment(const ExperimentSpec& spec, double p,
                                         const SolveOptions& opts) {
  if (spec.hs.empty()) {
    throw InputError("removability_experiment: refinement chain required");
  }
  ExperimentReport report;
  report.quantity = "sup-node difference across solve variants";
  report.contraction = spec.contraction;
  report.floor = spec.floor;

  for (double h : spec.hs) {
    GridDomain full = build_grid(spec, h);
    const std::vector<std::size_t> e = e_nodes_on(full, spec);
    SolveResult u_full = dirichlet_solve(full, p, opts);

    GridDomain voided = build_grid(spec, h);
    for (std::size_t i : e) voided.void_node(i);
    SolveResult u_void = dirichlet_solve(voided, p, opts);

    GridDomain pinned = build_grid(spec, h);
    std::vector<double> x(pinned.dim());
    for (std::size_t i : e) {
      pinned.coords(i, x);
      pinned.pin_node(i, spec.has_pin_value ? spec.pin_value : spec.boundary(x));
    }
    SolveResult u_pin = dirichlet_solve(pinned, p, opts);

    ExperimentLevel level;
    level.h = h;
    level.diff_removed = sup_diff_outside(voided, u_full.values, u_void.values, e);
    level.diff_pinned = sup_diff_outside(full, u_full.values, u_pin.values, e);
    report.levels.push_back(level);
  }

  const std::size_t n = report.levels.size();
  if (n >= 2) {
    const double a = report.levels[n - 2].diff_pinned;
    const double b = report.levels[n - 1].diff_pinned;
    const bool pinned_stable =
        b > spec.floor && std::abs(b - a) <= 0.25 * std::abs(b);
    bool removed_contracts = true;
    for (std::size_t i = 1; i < n; ++i) {
      const double prev = report.levels[i - 1].diff_removed;
      const double cur = report.levels[i].diff_removed;
      if (cur > spec.floor && cur > spec.contraction * prev) {
        removed_contracts = false;
        break;
      }
    }
    if (pinned_stable) {
      report.verdict = ExperimentVerdict::Obstructed;
    } else if (removed_contracts) {
      report.verdict = ExperimentVerdict::RemovableConsistent;
    }
  }
  return report;
}

}  // namespace potlab
