#include "potlab/verdict.hpp"

#include "potlab/errors.hpp"

namespace potlab {

SetDesc SetDesc::point(std::vector<double> x) {
  SetDesc s;
  s.kind = Point;
  s.points.push_back(std::move(x));
  return s;
}

SetDesc SetDesc::finite_points(std::vector<std::vector<double>> xs) {
  if (xs.empty()) return empty();
  if (xs.size() == 1) return point(std::move(xs.front()));
  SetDesc s;
  s.kind = FinitePoints;
  s.points = std::move(xs);
  return s;
}

SetDesc SetDesc::countable_points(std::string label) {
  SetDesc s;
  s.kind = CountablePoints;
  s.label = std::move(label);
  return s;
}

SetDesc SetDesc::closed_ball(std::vector<double> center, double radius) {
  if (!(radius >= 0.0)) throw InputError("SetDesc: negative radius");
  if (radius == 0.0) return point(std::move(center));
  SetDesc s;
  s.kind = ClosedBall;
  s.center = std::move(center);
  s.radius = radius;
  return s;
}

SetDesc SetDesc::closed_box(std::vector<double> lo, std::vector<double> hi) {
  SetDesc s;
  s.kind = ClosedBox;
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  return s;
}

SetDesc SetDesc::whole_space() {
  SetDesc s;
  s.kind = WholeSpace;
  return s;
}

SetDesc SetDesc::union_of(std::vector<SetDesc> parts) {
  SetDesc s;
  s.kind = Union;
  s.parts = std::move(parts);
  return s;
}

bool SetDesc::is_countable() const {
  switch (kind) {
    case Empty:
    case Point:
    case FinitePoints:
    case CountablePoints:
      return true;
    case Union:
      for (const auto& part : parts) {
        if (!part.is_countable()) return false;
      }
      return true;
    default:
      return false;
  }
}

bool SetDesc::has_interior() const {
  switch (kind) {
    case WholeSpace:
      return true;
    case ClosedBall:
      return radius > 0.0;
    case ClosedBox: {
      for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!(lo[i] < hi[i])) return false;
      }
      return !lo.empty();
    }
    case Union:
      for (const auto& part : parts) {
        if (part.has_interior()) return true;
      }
      return false;
    default:
      return false;
  }
}

CapacityFact CapacityFact::declared_zero() {
  return {Zero, Declared, "declared"};
}

CapacityFact CapacityFact::declared_positive() {
  return {Positive, Declared, "declared"};
}

CapacityFact CapacityFact::numeric(CapTrend trend) {
  CapacityFact f;
  f.provenance = Numeric;
  switch (trend) {
    case CapTrend::TrendZero:
      f.status = NumericTrendZero;
      f.rule = "refinement chain contracting";
      break;
    case CapTrend::TrendPositive:
      f.status = NumericTrendPositive;
      f.rule = "refinement chain stabilized";
      break;
    default:
      f.status = NumericTrendZero;
      f.rule = "inconclusive chain";
      break;
  }
  return f;
}

std::optional<CapacityFact> structural_capacity(const SetDesc& e, int n,
                                                double p, bool unweighted) {
  if (e.is_empty()) return CapacityFact{CapacityFact::Zero, CapacityFact::Structural, "empty-set"};
  if (e.has_interior()) {
    return CapacityFact{CapacityFact::Positive, CapacityFact::Structural,
                        "nonempty-interior"};
  }
  if (!unweighted) return std::nullopt;
  if (p > static_cast<double>(n)) {
    // Every nonempty set carries capacity when p exceeds the dimension.
    return CapacityFact{CapacityFact::Positive, CapacityFact::Structural,
                        "nonempty-with-p-above-dimension"};
  }
  if (e.is_countable()) {
    return CapacityFact{CapacityFact::Zero, CapacityFact::Structural,
                        e.kind == SetDesc::Union ? "countable-union-of-null-sets"
                                                 : "countable-set"};
  }
  return std::nullopt;
}

namespace {

std::string fact_tag(const std::string& subject, const CapacityFact& f) {
  const char* status = "";
  switch (f.status) {
    case CapacityFact::Zero: status = "zero"; break;
    case CapacityFact::Positive: status = "positive"; break;
    case CapacityFact::NumericTrendZero: status = "trend-zero"; break;
    case CapacityFact::NumericTrendPositive: status = "trend-positive"; break;
  }
  const char* prov = f.provenance == CapacityFact::Structural ? "structural"
                     : f.provenance == CapacityFact::Declared ? "declared"
                                                              : "numeric";
  return subject + "=" + status + " [" + prov + ":" + f.rule + "]";
}

bool certified(const CapacityFact& f) {
  return f.provenance != CapacityFact::Numeric;
}

// Structural facts win over declared ones; numeric facts never certify.
std::optional<CapacityFact> resolve(const SetDesc& set, int n, double p,
                                    bool unweighted,
                                    const std::optional<CapacityFact>& given) {
  if (auto s = structural_capacity(set, n, p, unweighted)) return s;
  return given;
}

}  // namespace

CaseVerdict classify_unweighted(int n, double p, const SetDesc& omega,
                                const SetDesc& e, const FactSheet& facts) {
  if (n < 2) throw InputError("classify_unweighted: n >= 2 required");
  CaseVerdict v;
  const auto cap_e = resolve(e, n, p, true, facts.cap_e);
  if (cap_e) v.facts_used.push_back(fact_tag("cap(E)", *cap_e));

  if (cap_e && certified(*cap_e) && cap_e->status == CapacityFact::Zero) {
    v.removable = Removable::Yes;
    v.clause = "capacity-zero";
    return v;
  }
  const bool degenerate =
      p > static_cast<double>(n) && omega.is_whole_space() && e.is_singleton();
  if (degenerate) {
    v.removable = Removable::YesDegenerate;
    v.clause = "singleton-whole-space-p-above-dimension";
    return v;
  }
  if (cap_e && certified(*cap_e) && cap_e->status == CapacityFact::Positive) {
    v.removable = Removable::No;
    v.clause = "positive-capacity-without-degenerate-branch";
    return v;
  }
  v.removable = Removable::Unknown;
  v.clause = "insufficient-capacity-evidence";
  return v;
}

CaseVerdict classify_weighted(int n, double p, const BallGrowth& growth,
                              const SetDesc& omega, const SetDesc& e,
                              const FactSheet& facts) {
  if (n < 2) throw InputError("classify_weighted: n >= 2 required");
  CaseVerdict v;
  const auto cap_e = resolve(e, n, p, false, facts.cap_e);
  if (cap_e) v.facts_used.push_back(fact_tag("cap(E)", *cap_e));

  if (cap_e && certified(*cap_e) && cap_e->status == CapacityFact::Zero) {
    v.removable = Removable::Yes;
    v.clause = "capacity-zero";
    return v;
  }

  // Degenerate branch needs an atom x0 with cap(E minus {x0}) = 0, a full
  // domain in the capacity sense, and parabolic volume growth.
  auto cap_minus = e.is_singleton()
                       ? resolve(SetDesc::empty(), n, p, false, facts.cap_e_minus_x0)
                       : facts.cap_e_minus_x0;
  auto cap_comp = omega.is_whole_space()
                      ? resolve(SetDesc::empty(), n, p, false, facts.cap_complement)
                      : facts.cap_complement;
  const Parabolicity para = parabolicity(growth, p);

  const bool minus_zero =
      cap_minus && certified(*cap_minus) && cap_minus->status == CapacityFact::Zero;
  const bool comp_zero =
      cap_comp && certified(*cap_comp) && cap_comp->status == CapacityFact::Zero;
  const bool minus_positive = cap_minus && certified(*cap_minus) &&
                              cap_minus->status == CapacityFact::Positive;
  const bool comp_positive = cap_comp && certified(*cap_comp) &&
                             cap_comp->status == CapacityFact::Positive;

  if (cap_minus) v.facts_used.push_back(fact_tag("cap(E-x0)", *cap_minus));
  if (cap_comp) v.facts_used.push_back(fact_tag("cap(comp(Omega))", *cap_comp));
  v.facts_used.push_back(std::string("growth=") +
                         (para == Parabolicity::Parabolic    ? "parabolic"
                          : para == Parabolicity::Hyperbolic ? "hyperbolic"
                                                             : "inconclusive"));

  if (minus_zero && comp_zero && para == Parabolicity::Parabolic) {
    v.removable = Removable::YesDegenerate;
    v.clause = "atom-with-null-remainder-parabolic";
    return v;
  }
  if (cap_e && certified(*cap_e) && cap_e->status == CapacityFact::Positive) {
    const bool clause_fails = minus_positive || comp_positive ||
                              para == Parabolicity::Hyperbolic;
    if (clause_fails) {
      v.removable = Removable::No;
      v.clause = "positive-capacity-and-degenerate-branch-refuted";
      return v;
    }
  }
  v.removable = Removable::Unknown;
  v.clause = "insufficient-capacity-evidence";
  return v;
}

CaseVerdict classify_superharmonic(const FactSheet& facts) {
  CaseVerdict v;
  if (!facts.cap_e) {
    v.removable = Removable::Unknown;
    v.clause = "missing-capacity-fact";
    return v;
  }
  const CapacityFact& f = *facts.cap_e;
  v.facts_used.push_back(fact_tag("cap(E)", f));
  if (certified(f) && f.status == CapacityFact::Zero) {
    v.removable = Removable::Yes;
    v.clause = "capacity-zero-all-senses";
  } else if (certified(f) && f.status == CapacityFact::Positive) {
    v.removable = Removable::No;
    v.clause = "positive-capacity-all-senses";
  } else {
    v.removable = Removable::Unknown;
    v.clause = "numeric-evidence-only";
  }
  return v;
}

std::string to_string(Removable r) {
  switch (r) {
    case Removable::Yes: return "yes";
    case Removable::YesDegenerate: return "yes-degenerate";
    case Removable::No: return "no";
    case Removable::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace potlab
