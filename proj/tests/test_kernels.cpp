#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "potlab/kernels.hpp"

using potlab::kernels::active_ops;
using potlab::kernels::Ops;
using potlab::kernels::scalar_ops;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1.0});
}

}  // namespace

TEST_CASE("scalar reference values on a tiny fixture") {
  const double x[] = {1.0, -2.0, 3.0, -4.0, 5.0};
  const double y[] = {2.0, 2.0, 2.0, 2.0, 2.0};
  const Ops& s = scalar_ops();
  CHECK(s.sum(x, 5) == 3.0);
  CHECK(s.dot(x, y, 5) == 6.0);
  CHECK(s.max_abs(x, 5) == 5.0);

  double acc[] = {1.0, 1.0, 1.0, 1.0, 1.0};
  s.axpy(2.0, x, acc, 5);
  CHECK(acc[0] == 3.0);
  CHECK(acc[4] == 11.0);

  const double g2[] = {4.0, 9.0};
  const double w[] = {1.0, 2.0};
  CHECK(s.weighted_pow_sum(g2, w, 2, 1.0) == 22.0);          // dot path
  CHECK(s.weighted_pow_sum(g2, w, 2, 0.5) == 2.0 + 2.0 * 3.0);  // sqrt path
}

TEST_CASE("active variant agrees with the scalar reference to 1e-12") {
  const Ops& ref = scalar_ops();
  const Ops& act = active_ops();
  INFO("active kernel set: ", act.name);

  // Sizes cover all vector-remainder paths plus a large case.
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{2},
                        std::size_t{3}, std::size_t{4}, std::size_t{5},
                        std::size_t{7}, std::size_t{8}, std::size_t{17},
                        std::size_t{1000}, std::size_t{1003}}) {
    const auto x = random_vec(n, 11 + n);
    const auto y = random_vec(n, 23 + n);
    std::vector<double> g2(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
      g2[i] = x[i] * x[i] + 0.01;
      w[i] = std::abs(y[i]) + 0.5;
    }

    CHECK(close_rel(ref.sum(x.data(), n), act.sum(x.data(), n), 1e-12));
    CHECK(close_rel(ref.dot(x.data(), y.data(), n), act.dot(x.data(), y.data(), n),
                    1e-12));
    CHECK(ref.max_abs(x.data(), n) == act.max_abs(x.data(), n));
    for (double half_p : {1.0, 0.75, 1.5}) {
      CHECK(close_rel(ref.weighted_pow_sum(g2.data(), w.data(), n, half_p),
                      act.weighted_pow_sum(g2.data(), w.data(), n, half_p), 1e-12));
    }

    auto acc_ref = random_vec(n, 37 + n);
    auto acc_act = acc_ref;
    ref.axpy(1.7, x.data(), acc_ref.data(), n);
    act.axpy(1.7, x.data(), acc_act.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(close_rel(acc_ref[i], acc_act[i], 1e-12));
    }
  }
}

TEST_CASE("reductions are reproducible within a run") {
  const auto x = random_vec(1003, 99);
  const auto y = random_vec(1003, 100);
  const Ops& act = active_ops();
  const double d1 = act.dot(x.data(), y.data(), x.size());
  const double d2 = act.dot(x.data(), y.data(), x.size());
  CHECK(d1 == d2);  // bitwise: fixed-order lane combination
}
