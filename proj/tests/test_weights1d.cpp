#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "potlab/errors.hpp"
#include "potlab/weights1d.hpp"

using namespace potlab;

namespace {

// Closed-form nu of a power weight |x|^alpha on (a, b) with 0 <= a < b:
// integral of x^{-beta}, beta = alpha / (p - 1).
double power_nu_oracle(double alpha, double p, double a, double b) {
  const double beta = alpha / (p - 1.0);
  return (std::pow(b, 1.0 - beta) - std::pow(a, 1.0 - beta)) / (1.0 - beta);
}

}  // namespace

TEST_CASE("nu of constant weights is a scaled length") {
  const Exponent p(2.0);
  Weight1D w = Weight1D::constant(4.0, p);
  // dual density 4^{1/(1-2)} = 1/4
  CHECK(std::abs(nu_measure(w, {0.0, 2.0}) - 0.5) <= 1e-10);
  CHECK(nu_measure(w, {1.0, 1.0}) == 0.0);
  CHECK(std::isinf(nu_measure(w, {0.0, kInf})));
}

TEST_CASE("nu of power weights matches the antiderivative oracle") {
  const double cases[][4] = {
      // alpha, p, a, b
      {1.0, 3.0, 0.0, 1.0},
      {1.0, 3.0, 0.25, 4.0},
      {0.5, 2.0, 0.0, 2.0},
      {-0.5, 2.0, 0.0, 1.0},
      {2.0, 4.0, 0.0, 3.0},
  };
  for (const auto& c : cases) {
    CAPTURE(c[0]);
    CAPTURE(c[1]);
    Weight1D w = Weight1D::power(c[0], Exponent(c[1]));
    const double got = nu_measure(w, {c[2], c[3]});
    const double want = power_nu_oracle(c[0], c[1], c[2], c[3]);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("nu of exponential weights matches the antiderivative oracle") {
  const Exponent p(2.0);
  Weight1D w = Weight1D::exponential(1.0, p);  // dual density e^{-x}
  CHECK(nu_measure(w, {0.0, 2.0}) ==
        doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("non-integrable dual density is detected") {
  // w = |x| at p = 2 has dual density 1/|x|.
  Weight1D w = Weight1D::power(1.0, Exponent(2.0));
  CHECK_THROWS_AS(nu_measure(w, {-1.0, 1.0}), NonIntegrable);
  CHECK_THROWS_AS(nu_measure(w, {0.0, 1.0}), NonIntegrable);
}

TEST_CASE("nu_signed is antisymmetric and additive") {
  Weight1D w = Weight1D::power(0.5, Exponent(2.0));
  const double ab = nu_signed(w, 0.5, 2.0);
  CHECK(nu_signed(w, 2.0, 0.5) == doctest::Approx(-ab).epsilon(1e-12));
  const double mid = nu_signed(w, 0.5, 1.0) + nu_signed(w, 1.0, 2.0);
  CHECK(ab == doctest::Approx(mid).epsilon(1e-9));
}

TEST_CASE("table weights use the midpoint convention") {
  Weight1D w = Weight1D::table({{0.0, 1.0}, {1.0, 3.0}}, Exponent(2.0));
  CHECK(w(0.2) == 1.0);
  CHECK(w(0.7) == 3.0);
  CHECK(w(-5.0) == 1.0);  // edge extension
  CHECK(w(5.0) == 3.0);
}

TEST_CASE("weight grammar parses all kinds") {
  const Exponent p(2.0);
  CHECK(Weight1D::parse("const 2.5", p)(1.0) == 2.5);
  CHECK(Weight1D::parse("pow 2", p)(3.0) == doctest::Approx(9.0));
  CHECK(Weight1D::parse("exp 1", p)(1.0) == doctest::Approx(std::exp(1.0)));
  CHECK_THROWS_AS(Weight1D::parse("gauss 1", p), InputError);
  CHECK_THROWS_AS(Weight1D::parse("table /nonexistent/file.csv", p), InputError);

  const char* path = "potlab_test_table.csv";
  {
    std::ofstream f(path);
    f << "x,w\n-1,2\n1,4\n";  // non-numeric header rows are skipped
  }
  Weight1D t = Weight1D::parse(std::string("table ") + path, p);
  CHECK(t(-0.5) == 2.0);
  CHECK(t(0.5) == 4.0);
  std::remove(path);
}

TEST_CASE("A_p probe: constant weights give exactly 1") {
  for (double p : {1.5, 2.0, 3.0}) {
    Weight1D w = Weight1D::constant(7.0, Exponent(p));
    auto probe = dyadic_probe(-2.0, 2.0, -3, 2, 5);
    const ApEstimate est = ap_constant(w, probe);
    CHECK(est.lower_bound == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("A_p probe properties: >= 1, scale invariant, monotone in probes") {
  const Exponent p(2.0);
  Weight1D w = Weight1D::from_density(
      [](double x) { return 1.0 + 0.5 * std::sin(x); }, p, {}, "wavy");
  Weight1D w2 = Weight1D::from_density(
      [](double x) { return 2.0 * (1.0 + 0.5 * std::sin(x)); }, p, {}, "wavy2");

  auto small_probe = dyadic_probe(-2.0, 2.0, -2, 0, 3);
  auto big_probe = dyadic_probe(-2.0, 2.0, -4, 2, 7);
  const double a_small = ap_constant(w, small_probe).lower_bound;
  const double a_big = ap_constant(w, big_probe).lower_bound;
  CHECK(a_small >= 1.0 - 1e-12);
  CHECK(a_big >= a_small - 1e-12);
  // The A_p expression is invariant under positive scaling of w.
  CHECK(ap_constant(w2, big_probe).lower_bound ==
        doctest::Approx(a_big).epsilon(1e-9));
}

TEST_CASE("A_p oracle: step weight on symmetric intervals") {
  // w = 1 on x < 0, 2 on x > 0 at p = 2: on (-a, a) the expression is
  // (3/2) * (3/4) = 9/8, and it is the supremum over centered intervals.
  const Exponent p(2.0);
  Weight1D w = Weight1D::table({{-1.0, 1.0}, {1.0, 2.0}}, p);
  Interval probe[] = {Interval{-2.0, 2.0}};
  CHECK(ap_constant(w, probe).lower_bound == doctest::Approx(9.0 / 8.0).epsilon(1e-9));
}

TEST_CASE("length ratios over open sets") {
  const Exponent p(2.0);
  Weight1D w = Weight1D::constant(1.0, p);

  SUBCASE("bounded component, half removed") {
    OpenSet1D omega = OpenSet1D::make({{0.0, 2.0}});
    RelClosed1D e = RelClosed1D::make(omega, {{{1.0, 2.0}}});
    const RatioResult r = lebesgue_ratio(omega, e);
    CHECK(r.C == doctest::Approx(2.0));
    CHECK(nu_ratio(omega, e, w).C == doctest::Approx(2.0).epsilon(1e-9));
  }

  SUBCASE("inf/inf convention gives 1") {
    OpenSet1D omega = OpenSet1D::whole_line();
    RelClosed1D e = RelClosed1D::make(omega, {{{0.0, kInf}}});
    CHECK(lebesgue_ratio(omega, e).C == doctest::Approx(1.0));
  }

  SUBCASE("unbounded component with finite complement fails") {
    OpenSet1D omega = OpenSet1D::whole_line();
    RelClosed1D e = RelClosed1D::make(omega, {{{-kInf, 0.0}, {1.0, kInf}}});
    const RatioResult r = lebesgue_ratio(omega, e);
    CHECK(std::isinf(r.C));
    CHECK(r.worst_component == 0);
  }

  SUBCASE("worst component is reported") {
    OpenSet1D omega = OpenSet1D::make({{0.0, 2.0}, {3.0, 11.0}});
    RelClosed1D e = RelClosed1D::make(omega, {{{1.0, 2.0}}, {{5.0, 11.0}}});
    const RatioResult r = lebesgue_ratio(omega, e);
    CHECK(r.C == doctest::Approx(4.0));
    CHECK(r.worst_component == 1);
  }
}

TEST_CASE("nu ratio against a closed-form oracle") {
  // w = e^x at p = 2 on Omega = (0,2), E = [1,2):
  // nu((0,2)) / nu((0,1)) = (1 - e^-2) / (1 - e^-1) = 1 + e^-1.
  const Exponent p(2.0);
  Weight1D w = Weight1D::exponential(1.0, p);
  OpenSet1D omega = OpenSet1D::make({{0.0, 2.0}});
  RelClosed1D e = RelClosed1D::make(omega, {{{1.0, 2.0}}});
  CHECK(nu_ratio(omega, e, w).C ==
        doctest::Approx(1.0 + std::exp(-1.0)).epsilon(1e-9));
}

TEST_CASE("component families: bounded and unbounded ratio sequences") {
  const Exponent p(2.0);
  Weight1D w = Weight1D::constant(1.0, p);

  ComponentFamily growing{[](int j) {
    return std::make_pair(Interval{0.0, 2.0 * j},
                          std::vector<ClosedPiece>{{1.0, 2.0 * j}});
  }};
  const RatioResult r = lebesgue_ratio(growing);
  CHECK(std::isinf(r.C));

  ComponentFamily bounded{[](int j) {
    const double base = 3.0 * j;
    return std::make_pair(Interval{base, base + 2.0},
                          std::vector<ClosedPiece>{{base + 1.0, base + 2.0}});
  }};
  CHECK(lebesgue_ratio(bounded).C == doctest::Approx(2.0));
  CHECK(nu_ratio(bounded, w).C == doctest::Approx(2.0).epsilon(1e-9));
}
