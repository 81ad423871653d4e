#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "potlab/harmonic1d.hpp"

namespace potlab {

struct QuasiConstant {
  double Q = 1.0;
  explicit QuasiConstant(double q);
};

using Fn1D = std::function<double(double)>;

// Odd reflection about (pivot, pivot_value): the reflected function satisfies
// u*(pivot + t) + u*(pivot - t) = 2 * pivot_value.
class ReflectedFunction {
 public:
  ReflectedFunction(Fn1D base, Interval base_domain, double pivot,
                    double pivot_value);

  double operator()(double x) const;
  Interval domain() const;  // base domain united with its mirror image
  double pivot() const { return pivot_; }
  double pivot_value() const { return pivot_value_; }

 private:
  Fn1D base_;
  Interval base_domain_;
  double pivot_;
  double pivot_value_;
  bool original_on_right_;
};

// pivot_value defaults to the numerically probed one-sided limit of u at the
// pivot; throws LimitMissing if the probe does not settle.
ReflectedFunction reflect(Fn1D u, Interval domain, double pivot,
                          std::optional<double> pivot_value = std::nullopt);

// How the quasiharmonicity constant inflates per reflection:
//   Coarse: factor 2^p (always valid),
//   Sharp:  factor max{2, 2^{p-1}} (always valid, never worse than Coarse),
//   SmallQ: Q -> Q (2 - Q^{-1/p})^p, valid only for Q below a p-dependent
//           bound (ConditionFailed outside it) but tight near Q = 1.
enum class QUpdateRule { Coarse, Sharp, SmallQ };

// Quasiharmonicity constant after one reflection.
QuasiConstant q_update(QuasiConstant q, const Exponent& p, QUpdateRule rule);

// The reflection inflation factor per the chosen rule.
double q_update_factor(double Q, double p, QUpdateRule rule);

struct QuasiExtension {
  Fn1D U;                  // defined on all of Omega
  OpenSet1D domain;
  double Qprime = 1.0;
  int reflections_used = 0;
};

// Extends a bounded Q-quasiharmonic u (one evaluable per component of
// Omega \ E) to Omega by repeated reflection; unweighted R only.
// Throws NotRemovable when the length-ratio criterion fails.
QuasiExtension extend_quasi_1d(const OpenSet1D& omega, const RelClosed1D& e,
                               const std::vector<Fn1D>& u, QuasiConstant q,
                               const Exponent& p);

Verdict1D decide_removable_quasi_1d(const OpenSet1D& omega, const RelClosed1D& e);
Verdict1D decide_removable_quasi_1d(const ComponentFamily& family,
                                    const FamilyProbe& probe = {});

struct FqResult {
  bool infeasible = false;
  double bound = 1.0;
};

// Smallest a >= 1 with  Q a^p >= x^{p-1} + (a-1)^p (1 - 1/x)^{1-p}:
// a certified lower bound for U(x) over all Q-quasiharmonic extensions U of
// the identity on (0,1). Infeasible when no a satisfies the inequality.
FqResult f_q_bound(double Q, double p, double x);

}  // namespace potlab
