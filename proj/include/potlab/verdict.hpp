#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "potlab/capacity.hpp"

namespace potlab {

// Small set-descriptor algebra: enough to express points, balls, boxes,
// countable point families, finite unions and complements of open sets.
struct SetDesc {
  enum Kind {
    Empty,
    Point,
    FinitePoints,
    CountablePoints,  // e.g. a lattice or sequence, no geometry carried
    ClosedBall,
    ClosedBox,
    WholeSpace,
    ComplementOfOpen,  // relative complement R^n minus a named open set
    Union
  };
  Kind kind = Empty;
  std::vector<std::vector<double>> points;  // Point / FinitePoints
  std::vector<double> center, lo, hi;
  double radius = 0.0;
  std::string label;
  std::vector<SetDesc> parts;  // Union

  static SetDesc empty() { return {}; }
  static SetDesc point(std::vector<double> x);
  static SetDesc finite_points(std::vector<std::vector<double>> xs);
  static SetDesc countable_points(std::string label);
  static SetDesc closed_ball(std::vector<double> center, double radius);
  static SetDesc closed_box(std::vector<double> lo, std::vector<double> hi);
  static SetDesc whole_space();
  static SetDesc union_of(std::vector<SetDesc> parts);

  bool is_empty() const { return kind == Empty; }
  bool is_singleton() const { return kind == Point; }
  bool is_whole_space() const { return kind == WholeSpace; }
  bool is_countable() const;
  bool has_interior() const;
};

struct CapacityFact {
  enum Status { Zero, Positive, NumericTrendZero, NumericTrendPositive };
  enum Provenance { Structural, Declared, Numeric };
  Status status = Zero;
  Provenance provenance = Declared;
  std::string rule;  // structural rule name or trend description

  static CapacityFact declared_zero();
  static CapacityFact declared_positive();
  static CapacityFact numeric(CapTrend trend);
};

// Structural capacity classification (unweighted, p <= n side for points):
// empty sets, singletons/countable sets with p <= n, and countable unions of
// such are Zero; sets with nonempty interior (and singletons when p > n) are
// Positive. Returns nullopt when no whitelisted rule applies.
std::optional<CapacityFact> structural_capacity(const SetDesc& e, int n,
                                                double p,
                                                bool unweighted = true);

enum class Removable { Yes, YesDegenerate, No, Unknown };

struct CaseVerdict {
  Removable removable = Removable::Unknown;
  std::string clause;
  std::vector<std::string> facts_used;
};

struct FactSheet {
  std::optional<CapacityFact> cap_e;           // C(E)
  std::optional<CapacityFact> cap_e_minus_x0;  // C(E minus candidate atom)
  std::optional<CapacityFact> cap_complement;  // C(R^n minus Omega)
};

// Bounded p-harmonic removability for unweighted R^n: Yes iff C_p(E) = 0,
// with the lone degenerate branch p > n, Omega = R^n, E a singleton.
CaseVerdict classify_unweighted(int n, double p, const SetDesc& omega,
                                const SetDesc& e, const FactSheet& facts);

// Weighted version: the degenerate branch additionally needs
// C(E minus {x0}) = 0, C(R^n minus Omega) = 0 and p-parabolic growth.
CaseVerdict classify_weighted(int n, double p, const BallGrowth& growth,
                              const SetDesc& omega, const SetDesc& e,
                              const FactSheet& facts);

// Superharmonic removability: Yes iff Zero, No iff Positive, no exceptional
// branch; applies uniformly to all four removability senses.
CaseVerdict classify_superharmonic(const FactSheet& facts);

std::string to_string(Removable r);

}  // namespace potlab
