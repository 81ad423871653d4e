#include "potlab/capacity.hpp"

#include <algorithm>
#include <cmath>

#include "potlab/errors.hpp"
#include "potlab/quadrature.hpp"

namespace potlab {

CapacityEstimate variational_capacity(const CondenserSpec& spec, double h,
                                      double p, const SolveOptions& opts) {
  if (spec.lo.size() != static_cast<std::size_t>(spec.dim) ||
      spec.hi.size() != static_cast<std::size_t>(spec.dim)) {
    throw InputError("variational_capacity: box arity mismatch");
  }
  if (!spec.omega) throw InputError("variational_capacity: omega required");
  if (!spec.plate && spec.plate_points.empty()) {
    throw InputError("variational_capacity: plate required");
  }
  GridDomain g(spec.dim, spec.lo, spec.hi, h, spec.omega, spec.weight,
               [](std::span<const double>) { return 0.0; });
  if (spec.plate) g.pin_region(spec.plate, 1.0);
  for (const auto& pt : spec.plate_points) {
    if (pt.size() != static_cast<std::size_t>(spec.dim)) {
      throw InputError("variational_capacity: plate point arity mismatch");
    }
    const std::size_t i = g.nearest_node(pt);
    if (!g.valued(i)) throw InputError("variational_capacity: plate point outside omega");
    g.pin_node(i, 1.0);
  }
  if (!g.has_pinned()) throw InputError("variational_capacity: empty plate on this grid");

  SolveResult sol = minimize_energy(g, p, opts);
  if (!sol.converged) {
    throw NoConvergence("variational_capacity: minimizer stalled, grad_max=" +
                        std::to_string(sol.grad_max) + " after " +
                        std::to_string(sol.iterations) + " iterations");
  }
  CapacityEstimate est;
  est.value = sol.energy;
  est.h = h;
  est.iterations = sol.iterations;
  est.energy_history = std::move(sol.energy_history);
  return est;
}

CapacityEstimate capacity_refinement(const CondenserSpec& spec,
                                     std::vector<double> hs, double p,
                                     const SolveOptions& opts) {
  if (hs.empty()) throw InputError("capacity_refinement: need at least one h");
  std::sort(hs.begin(), hs.end(), std::greater<>());
  CapacityEstimate finest;
  std::vector<std::pair<double, double>> chain;
  for (double h : hs) {
    finest = variational_capacity(spec, h, p, opts);
    chain.emplace_back(h, finest.value);
  }
  finest.refinement_chain = std::move(chain);
  return finest;
}

CapTrend null_capacity_trend(const std::vector<std::pair<double, double>>& chain,
                             const TrendOptions& opts) {
  if (chain.size() < 3) {
    throw InputError("null_capacity_trend: need a chain of length >= 3");
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!(chain[i].first < chain[i - 1].first)) {
      throw InputError("null_capacity_trend: h must be strictly decreasing");
    }
  }
  bool contracting = true;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const double prev = chain[i - 1].second;
    if (prev <= 0.0 || chain[i].second > opts.rho * prev) {
      contracting = false;
      break;
    }
  }
  if (contracting) return CapTrend::TrendZero;

  const double a = chain[chain.size() - 2].second;
  const double b = chain.back().second;
  if (b > opts.floor && std::abs(b - a) <= opts.stabilize_tol * std::abs(b)) {
    return CapTrend::TrendPositive;
  }
  return CapTrend::Inconclusive;
}

BallGrowth BallGrowth::power_law(double c, double d) {
  if (!(c > 0.0) || !(d > 0.0)) {
    throw InputError("BallGrowth: power law needs c > 0 and d > 0");
  }
  BallGrowth g;
  g.is_power_law = true;
  g.c = c;
  g.d = d;
  return g;
}

BallGrowth BallGrowth::closed_form(std::function<double(double)> mu) {
  if (!mu) throw InputError("BallGrowth: closed form requires a function");
  BallGrowth g;
  g.mu = std::move(mu);
  return g;
}

double BallGrowth::operator()(double r) const {
  if (is_power_law) return c * std::pow(r, d);
  return mu(r);
}

Parabolicity parabolicity(const BallGrowth& growth, double p) {
  if (!(p > 1.0)) throw InputError("parabolicity: require p > 1");
  if (growth.is_power_law) {
    // Integrand scales like r^{(1-d)/(p-1)}; the tail diverges iff the
    // exponent is >= -1, which reduces to p >= d.
    return p >= growth.d ? Parabolicity::Parabolic : Parabolicity::Hyperbolic;
  }
  const double q = 1.0 / (p - 1.0);
  auto integrand = [&](double r) {
    const double m = growth(r);
    if (!(m > 0.0)) throw InputError("parabolicity: growth must be positive");
    return std::pow(r / m, q);
  };
  // Dyadic blocks [2^k, 2^{k+1}]: geometric decay means a convergent tail,
  // non-decaying blocks mean divergence.
  std::vector<double> blocks;
  double total = 0.0;
  for (int k = 0; k < 64; ++k) {
    const double a = std::ldexp(1.0, k);
    const double b = std::ldexp(1.0, k + 1);
    quad::Options qo;
    qo.abs_tol = 1e-9 * std::max(1.0, total);
    const double v = quad::integrate(integrand, a, b, {}, qo).value;
    blocks.push_back(v);
    total += v;
    if (total > 1e12) return Parabolicity::Parabolic;
  }
  const std::size_t n = blocks.size();
  int decaying = 0, flat = 0;
  for (std::size_t i = n - 12; i < n; ++i) {
    const double prev = blocks[i - 1];
    if (prev <= 0.0) continue;
    const double ratio = blocks[i] / prev;
    if (ratio <= 0.9) ++decaying;
    if (ratio >= 0.99) ++flat;
  }
  if (decaying >= 10) return Parabolicity::Hyperbolic;
  if (flat >= 10) return Parabolicity::Parabolic;
  return Parabolicity::Inconclusive;
}

}  // namespace potlab
