#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "potlab/errors.hpp"
#include "potlab/harmonicnd.hpp"

using namespace potlab;

namespace {

GridDomain square_domain(double h, BoundaryFn boundary) {
  return GridDomain(2, {0.0, 0.0}, {1.0, 1.0}, h,
                    sdf_box({0.001, 0.001}, {0.999, 0.999}),
                    weight_const_nd(1.0), boundary);
}

GridDomain annulus_domain(double h) {
  return GridDomain(2, {-1.25, -1.25}, {1.25, 1.25}, h,
                    sdf_difference(sdf_disc({0.0, 0.0}, 1.0),
                                   sdf_disc({0.0, 0.0}, 0.25)),
                    weight_const_nd(1.0), [](std::span<const double> x) {
                      return std::hypot(x[0], x[1]) < 0.625 ? 1.0 : 0.0;
                    });
}

}  // namespace

TEST_CASE("linear boundary data is reproduced exactly at p = 2") {
  GridDomain g = square_domain(0.125, [](std::span<const double> x) {
    return 0.5 * x[0] - 0.25 * x[1] + 0.125;
  });
  SolveOptions opts;
  opts.grad_tol_factor = 1e-10;
  const SolveResult sol = dirichlet_solve(g, 2.0, opts);
  std::vector<double> x(2);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.node_class(i) != GridDomain::Free) continue;
    g.coords(i, x);
    CHECK(std::abs(sol.values[i] - (0.5 * x[0] - 0.25 * x[1] + 0.125)) <= 1e-10);
  }
}

TEST_CASE("linear boundary data is reproduced for p != 2 to solver tolerance") {
  GridDomain g = square_domain(0.125,
                               [](std::span<const double> x) { return x[0]; });
  const SolveResult sol = dirichlet_solve(g, 3.0);
  std::vector<double> x(2);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.node_class(i) != GridDomain::Free) continue;
    g.coords(i, x);
    CHECK(std::abs(sol.values[i] - x[0]) <= 1e-5);
  }
}

TEST_CASE("maximum and minimum principles on solved fields") {
  GridDomain g = annulus_domain(1.0 / 32);
  const SolveResult sol = dirichlet_solve(g, 2.0);
  CHECK(max_principle_check(g, sol.values).pass);
  CHECK(min_principle_check(g, sol.values).pass);

  // Constant fields pass via the constant branch.
  std::vector<double> constant(g.node_count(), 2.0);
  CHECK(max_principle_check(g, constant).pass);

  // A hand-built interior spike fails.
  std::vector<double> spiked = sol.values;
  spiked[g.free_nodes()[g.free_nodes().size() / 2]] = 50.0;
  CHECK_FALSE(max_principle_check(g, spiked).pass);
  spiked[g.free_nodes()[g.free_nodes().size() / 2]] = -50.0;
  CHECK_FALSE(min_principle_check(g, spiked).pass);
}

TEST_CASE("energy history of solves is nonincreasing") {
  GridDomain g = annulus_domain(1.0 / 16);
  for (double p : {1.7, 2.0, 3.0}) {
    const SolveResult sol = dirichlet_solve(g, p);
    for (std::size_t k = 1; k < sol.energy_history.size(); ++k) {
      CHECK(sol.energy_history[k] <= sol.energy_history[k - 1] + 1e-15);
    }
  }
}

TEST_CASE("minimality spot check against random perturbations") {
  GridDomain g = annulus_domain(1.0 / 16);
  for (double p : {2.0, 3.0}) {
    const SolveResult sol = dirichlet_solve(g, p);
    const QuasiminCheck qc = quasimin_spot_check(g, sol.values, p, 100);
    CAPTURE(qc.worst_relative_violation);
    CHECK(qc.pass);
  }
}

TEST_CASE("Harnack ratio probe") {
  GridDomain g = annulus_domain(1.0 / 32);

  std::vector<double> constant(g.node_count(), 4.0);
  const double center[] = {0.6, 0.0};
  CHECK(harnack_ratio(g, constant, center, 0.05) == doctest::Approx(1.0));

  const SolveResult sol = dirichlet_solve(g, 2.0);
  const double ratio = harnack_ratio(g, sol.values, center, 0.05);
  CHECK(std::isfinite(ratio));
  CHECK(ratio >= 1.0);
  // Scaling invariance of the ratio.
  std::vector<double> scaled = sol.values;
  for (auto& v : scaled) v *= 17.0;
  CHECK(harnack_ratio(g, scaled, center, 0.05) ==
        doctest::Approx(ratio).epsilon(1e-12));

  // 6B must fit inside Omega.
  CHECK_THROWS_AS(harnack_ratio(g, constant, center, 0.2), BallTooLarge);

  // A zero inside B flags an infinite ratio.
  std::vector<double> touching = constant;
  std::vector<double> pos{0.6, 0.0};
  touching[g.nearest_node(pos)] = 0.0;
  CHECK(std::isinf(harnack_ratio(g, touching, center, 0.05)));
}

TEST_CASE("annulus oscillation probe and the angular negative control") {
  GridDomain g = annulus_domain(1.0 / 32);
  const double center[] = {0.0, 0.0};

  std::vector<double> constant(g.node_count(), 1.0);
  CHECK(annulus_oscillation(g, constant, center, 0.3, 0.5) == 0.0);

  std::vector<double> angular(g.node_count(), 0.0);
  std::vector<double> x(2);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!g.valued(i)) continue;
    g.coords(i, x);
    angular[i] = std::atan2(x[1], x[0]);
  }
  // The angle jumps by ~2*pi across its branch cut in every annulus.
  const double osc_outer = annulus_oscillation(g, angular, center, 0.6, 0.8);
  const double osc_inner = annulus_oscillation(g, angular, center, 0.3, 0.5);
  CHECK(osc_outer >= 6.0);
  CHECK(osc_inner >= 6.0);
  CHECK(osc_inner >= osc_outer - 0.1);  // no decay: not limit-consistent
}

TEST_CASE("puncture oscillation shrinks under refinement for bounded solves") {
  const double center[] = {0.0, 0.0};
  double prev = 1e300;
  for (double h : {1.0 / 8, 1.0 / 16, 1.0 / 32}) {
    GridDomain g(2, {-1.25, -1.25}, {1.25, 1.25}, h, sdf_disc({0.0, 0.0}, 1.0),
                 weight_const_nd(1.0),
                 [](std::span<const double> x) { return x[0]; });
    std::vector<double> origin{0.0, 0.0};
    g.void_node(g.nearest_node(origin));
    const SolveResult sol = dirichlet_solve(g, 2.0);
    const double osc = annulus_oscillation(g, sol.values, center, 2.0 * h, 4.0 * h);
    CHECK(osc < prev);
    prev = osc;
  }
}

TEST_CASE("removability experiment: single voided node is removable-consistent") {
  ExperimentSpec spec;
  spec.lo = {-1.25, -1.25};
  spec.hi = {1.25, 1.25};
  spec.omega = sdf_disc({0.0, 0.0}, 1.0);
  spec.boundary = [](std::span<const double> x) { return x[0]; };
  spec.e_points = {{0.0, 0.0}};
  spec.hs = {1.0 / 8, 1.0 / 16, 1.0 / 32};
  const ExperimentReport report = removability_experiment(spec, 2.0);
  REQUIRE(report.levels.size() == 3);
  CHECK(report.verdict == ExperimentVerdict::RemovableConsistent);
  for (std::size_t k = 1; k < report.levels.size(); ++k) {
    CHECK(report.levels[k].diff_removed <
          report.levels[k - 1].diff_removed + 1e-12);
  }
}

TEST_CASE("removability experiment: pinned segment is an obstruction") {
  ExperimentSpec spec;
  spec.lo = {-1.25, -1.25};
  spec.hi = {1.25, 1.25};
  spec.omega = sdf_disc({0.0, 0.0}, 1.0);
  spec.boundary = [](std::span<const double>) { return 0.0; };
  spec.e_region = sdf_box({-0.5, -1e-9}, {0.5, 1e-9});
  spec.has_pin_value = true;
  spec.pin_value = 1.0;
  spec.hs = {1.0 / 8, 1.0 / 16, 1.0 / 32};
  const ExperimentReport report = removability_experiment(spec, 2.0);
  CHECK(report.verdict == ExperimentVerdict::Obstructed);
  CHECK(report.levels.back().diff_pinned > 0.1);
}

TEST_CASE("empty exceptional set gives identical solves") {
  ExperimentSpec spec;
  spec.lo = {-1.0, -1.0};
  spec.hi = {1.0, 1.0};
  spec.omega = sdf_disc({0.0, 0.0}, 0.8);
  spec.boundary = [](std::span<const double> x) { return x[0] + x[1]; };
  spec.hs = {1.0 / 8, 1.0 / 16, 1.0 / 32};
  const ExperimentReport report = removability_experiment(spec, 2.0);
  for (const auto& lvl : report.levels) {
    CHECK(lvl.diff_removed <= 1e-12);
    CHECK(lvl.diff_pinned <= 1e-12);
  }
  CHECK(report.verdict == ExperimentVerdict::RemovableConsistent);
}
