#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potlab/weights1d.hpp"

namespace potlab {

// A 1D A-harmonic function u(x) = value_at_base + slope * nu((base, x)),
// the two-parameter family parametrized by the dual measure nu.
class AffineInNu {
 public:
  AffineInNu(double slope, double value_at_base, double basepoint, Weight1D weight)
      : slope_(slope), value_at_base_(value_at_base), basepoint_(basepoint),
        weight_(std::move(weight)) {}

  double operator()(double x) const;
  double slope() const { return slope_; }
  double value_at_base() const { return value_at_base_; }
  double basepoint() const { return basepoint_; }
  bool is_constant() const { return slope_ == 0.0; }
  const Weight1D& weight() const { return weight_; }

 private:
  double slope_;
  double value_at_base_;
  double basepoint_;
  Weight1D weight_;
};

// The unique AffineInNu through (x1,u1) and (x2,u2) on I.
AffineInNu fit_two_points(const Weight1D& w, const Interval& I,
                          std::pair<double, double> p1,
                          std::pair<double, double> p2);

// One AffineInNu per component of its domain.
struct PiecewiseHarmonic1D {
  OpenSet1D domain;
  std::vector<AffineInNu> pieces;

  double eval(double x) const;  // throws InputError outside the domain
};

enum class Removability1D {
  Removable,
  WeaklyRemovableOnly,
  NonRemovableDisconnected,
  NonRemovableUnbounded,
};

struct Verdict1D {
  Removability1D status;
  std::optional<double> constant;              // C of |I| <= C |I \ E|
  std::optional<PiecewiseHarmonic1D> witness;  // bounded, with no bounded extension
  std::string clause;
};

// The unique A-harmonic extension of u (given on Omega \ E) to Omega.
// Throws Disconnected if some component I of Omega has I \ E disconnected;
// the characteristic-function witness can then be built with
// disconnection_witness below.
PiecewiseHarmonic1D weak_extend(const OpenSet1D& omega, const RelClosed1D& e,
                                const PiecewiseHarmonic1D& u);

// chi_V for V the first component of I \ E in the flagged component:
// A-harmonic on Omega \ E, no A-harmonic extension across E.
PiecewiseHarmonic1D disconnection_witness(const OpenSet1D& omega,
                                          const RelClosed1D& e,
                                          const Weight1D& w, int component);

Verdict1D decide_removable_1d(const OpenSet1D& omega, const RelClosed1D& e,
                              const Weight1D& w);

// Sequence-of-components variant (countably many condenser components).
Verdict1D decide_removable_1d(const ComponentFamily& family, const Weight1D& w,
                              const FamilyProbe& probe = {});

// C' * sup_norm where C' = nu_ratio; requires a Removable configuration.
double bounded_extension_bound(const OpenSet1D& omega, const RelClosed1D& e,
                               const Weight1D& w, double sup_norm);

}  // namespace potlab
