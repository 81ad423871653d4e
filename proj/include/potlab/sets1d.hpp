#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace potlab {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Open interval (lo, hi); endpoints may be +-infinity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
  bool empty() const { return !(lo < hi); }
  double length() const { return hi - lo; }
  bool contains(double x) const { return lo < x && x < hi; }
};

// Closed (in R) subinterval; a single point has lo == hi.
struct ClosedPiece {
  double lo = 0.0;
  double hi = 0.0;
};

// Finite description of an open subset of R as disjoint sorted components.
struct OpenSet1D {
  std::vector<Interval> components;

  static OpenSet1D make(std::vector<Interval> comps);  // validates invariants
  static OpenSet1D whole_line() { return make({{-kInf, kInf}}); }
};

// Relatively closed E inside an OpenSet1D: one piece list per component.
struct RelClosed1D {
  std::vector<std::vector<ClosedPiece>> pieces;

  // Validates against Omega: pieces lie in their component, are disjoint and
  // sorted, and no component of Omega is contained in E.
  static RelClosed1D make(const OpenSet1D& omega,
                          std::vector<std::vector<ClosedPiece>> pieces);
  static RelClosed1D empty(const OpenSet1D& omega) {
    return make(omega, std::vector<std::vector<ClosedPiece>>(omega.components.size()));
  }
};

// Components of I \ E (open intervals, sorted).
std::vector<Interval> component_minus(const Interval& I,
                                      const std::vector<ClosedPiece>& pieces);

// A countable family of condenser components (I_j, E_j), j = 1, 2, ...
// Used for the sequence-of-components scenarios that a finite OpenSet1D
// cannot describe.
struct ComponentFamily {
  std::function<std::pair<Interval, std::vector<ClosedPiece>>(int j)> generate;
};

}  // namespace potlab
