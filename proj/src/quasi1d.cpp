#include "potlab/quasi1d.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "potlab/errors.hpp"

namespace potlab {

QuasiConstant::QuasiConstant(double q) : Q(q) {
  if (!(q >= 1.0)) throw InputError("QuasiConstant: require Q >= 1");
}

ReflectedFunction::ReflectedFunction(Fn1D base, Interval base_domain,
                                     double pivot, double pivot_value)
    : base_(std::move(base)),
      base_domain_(base_domain),
      pivot_(pivot),
      pivot_value_(pivot_value) {
  if (base_domain.empty()) throw InputError("ReflectedFunction: empty base domain");
  if (!(pivot <= base_domain.lo || pivot >= base_domain.hi)) {
    throw InputError("ReflectedFunction: pivot must lie on one side of the base domain");
  }
  original_on_right_ = (pivot <= base_domain.lo);
}

double ReflectedFunction::operator()(double x) const {
  if (x == pivot_) return pivot_value_;
  const bool on_original = original_on_right_ ? (x > pivot_) : (x < pivot_);
  if (on_original) return base_(x);
  return 2.0 * pivot_value_ - base_(2.0 * pivot_ - x);
}

Interval ReflectedFunction::domain() const {
  const double mlo = 2.0 * pivot_ - base_domain_.hi;
  const double mhi = 2.0 * pivot_ - base_domain_.lo;
  return {std::min(base_domain_.lo, mlo), std::max(base_domain_.hi, mhi)};
}

namespace {

// One-sided limit of f at `pivot`, probed along a geometric sequence inside
// the domain. side = +1 probes from the right of the pivot.
double probe_limit(const Fn1D& f, double pivot, int side, double scale) {
  double h = 0.25 * scale;
  const double h_min = 1e-13 * std::max(1.0, std::abs(pivot));
  double prev = f(pivot + side * h);
  double prev_diff = -1.0;
  double value = prev;
  for (int k = 0; k < 60 && h > h_min; ++k) {
    h *= 0.5;
    const double cur = f(pivot + side * h);
    const double diff = std::abs(cur - prev);
    if (prev_diff >= 0.0 && diff > prev_diff * 1.5 && diff > 1e-9) {
      throw LimitMissing("reflect: oscillation at the pivot above tolerance");
    }
    value = cur;
    if (prev_diff >= 0.0 && diff < 0.9 * prev_diff) {
      const double r = diff / std::max(prev_diff, 1e-300);
      if (diff * r / (1.0 - r) < 1e-12) break;
    }
    prev = cur;
    prev_diff = diff;
  }
  return value;
}

}  // namespace

ReflectedFunction reflect(Fn1D u, Interval domain, double pivot,
                          std::optional<double> pivot_value) {
  double pv;
  if (pivot_value) {
    pv = *pivot_value;
  } else {
    const int side = (pivot <= domain.lo) ? +1 : -1;
    const double scale = std::isfinite(domain.length())
                             ? std::min(domain.length(), 1.0)
                             : 1.0;
    pv = probe_limit(u, pivot, side, scale);
  }
  return ReflectedFunction(std::move(u), domain, pivot, pv);
}

double q_update_factor(double Q, double p, QUpdateRule rule) {
  switch (rule) {
    case QUpdateRule::Coarse:
      return std::pow(2.0, p);
    case QUpdateRule::Sharp:
      return std::max(2.0, std::pow(2.0, p - 1.0));
    case QUpdateRule::SmallQ: {
      const double limit = std::max(1.0 / (2.0 - std::pow(2.0, 1.0 / p)),
                                    1.0 / (2.0 - std::pow(2.0, 1.0 / p - 1.0)));
      if (!(Q < limit)) {
        throw ConditionFailed("q_update: small-Q rule requires Q below its validity bound");
      }
      return std::pow(2.0 - std::pow(Q, -1.0 / p), p);
    }
  }
  throw InputError("q_update: unknown rule");
}

QuasiConstant q_update(QuasiConstant q, const Exponent& p, QUpdateRule rule) {
  return QuasiConstant(q.Q * q_update_factor(q.Q, p.p(), rule));
}

namespace {

struct Cover {
  Fn1D f;
  Interval dom;
};

// Extends f over one component I by reflecting about the covered endpoint
// adjacent to the remaining gap, clipping to I. Each reflection at least
// doubles the covered length.
Cover extend_component(Cover c, const Interval& I, int* reflections) {
  for (int iter = 0; iter < 80; ++iter) {
    const double gap_lo = c.dom.lo - I.lo;  // may be +inf
    const double gap_hi = I.hi - c.dom.hi;
    const bool need_lo = gap_lo > 0.0;
    const bool need_hi = gap_hi > 0.0;
    if (!need_lo && !need_hi) return c;
    const bool go_lo = need_lo && (!need_hi || gap_lo >= gap_hi);
    const double pivot = go_lo ? c.dom.lo : c.dom.hi;
    if (!std::isfinite(pivot)) {
      throw NotRemovable("extend_quasi_1d: cannot reflect about an infinite endpoint");
    }
    ReflectedFunction r = reflect(c.f, c.dom, pivot, std::nullopt);
    Interval d = r.domain();
    d.lo = std::max(d.lo, I.lo);
    d.hi = std::min(d.hi, I.hi);
    auto shared = std::make_shared<ReflectedFunction>(std::move(r));
    c.f = [shared](double x) { return (*shared)(x); };
    c.dom = d;
    ++(*reflections);
  }
  throw NoConvergence("extend_quasi_1d: reflection budget exhausted");
}

Verdict1D relabel_quasi(Verdict1D v) {
  if (v.status == Removability1D::NonRemovableDisconnected) {
    v.clause = "disconnected-complement-constant-propagation";
  } else if (v.status == Removability1D::NonRemovableUnbounded) {
    v.clause += "-fq-certificate";
  }
  return v;
}

}  // namespace

QuasiExtension extend_quasi_1d(const OpenSet1D& omega, const RelClosed1D& e,
                               const std::vector<Fn1D>& u, QuasiConstant q,
                               const Exponent& p) {
  Weight1D unweighted = Weight1D::constant(1.0, p);
  const Verdict1D verdict = decide_removable_quasi_1d(omega, e);
  if (verdict.status != Removability1D::Removable) {
    throw NotRemovable("extend_quasi_1d: length-ratio criterion fails (" +
                       verdict.clause + ")");
  }
  if (u.size() != omega.components.size()) {
    throw InputError("extend_quasi_1d: one evaluable per component of Omega\\E required");
  }

  std::vector<Interval> comps;
  auto covers = std::make_shared<std::vector<Cover>>();
  int max_reflections = 0;
  for (size_t i = 0; i < omega.components.size(); ++i) {
    const Interval& I = omega.components[i];
    const Interval rest = component_minus(I, e.pieces[i])[0];
    int used = 0;
    covers->push_back(extend_component(Cover{u[i], rest}, I, &used));
    max_reflections = std::max(max_reflections, used);
    comps.push_back(I);
  }

  const double factor = q_update_factor(q.Q, p.p(), QUpdateRule::Sharp);
  double qprime = q.Q;
  for (int k = 0; k < max_reflections; ++k) qprime *= factor;

  OpenSet1D domain = OpenSet1D::make(comps);
  Fn1D U = [covers, domain](double x) {
    for (size_t i = 0; i < domain.components.size(); ++i) {
      if (domain.components[i].contains(x)) return (*covers)[i].f(x);
    }
    throw InputError("extend_quasi_1d: evaluation outside Omega");
  };
  return QuasiExtension{std::move(U), domain, qprime, max_reflections};
}

Verdict1D decide_removable_quasi_1d(const OpenSet1D& omega, const RelClosed1D& e) {
  return relabel_quasi(
      decide_removable_1d(omega, e, Weight1D::constant(1.0, Exponent(2.0))));
}

Verdict1D decide_removable_quasi_1d(const ComponentFamily& family,
                                    const FamilyProbe& probe) {
  return relabel_quasi(
      decide_removable_1d(family, Weight1D::constant(1.0, Exponent(2.0)), probe));
}

FqResult f_q_bound(double Q, double p, double x) {
  if (!(Q >= 1.0)) throw InputError("f_q_bound: require Q >= 1");
  if (!(x > 1.0)) throw InputError("f_q_bound: require x > 1");
  const double c = std::pow(1.0 - 1.0 / x, 1.0 - p);
  const double xp = std::pow(x, p - 1.0);
  auto g = [&](double a) {
    return Q * std::pow(a, p) - xp - std::pow(a - 1.0, p) * c;
  };
  if (g(1.0) >= 0.0) return {false, 1.0};

  auto bisect = [&](double lo, double hi) {
    // g(lo) < 0 <= g(hi), g monotone increasing on [lo, hi].
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  if (Q >= c) {
    // g' > 0 on [1, inf): single crossing; double the bracket until found.
    double hi = std::max(2.0 * x, 64.0);
    while (g(hi) < 0.0) {
      hi *= 2.0;
      if (hi > std::pow(2.0, 40)) return {true, 0.0};
    }
    return {false, bisect(1.0, hi)};
  }

  // Q < c: g increases to a unique stationary point a* and decreases after it;
  // a* solves Q a^{p-1} = c (a-1)^{p-1} in closed form.
  const double k = std::pow(c / Q, 1.0 / (p - 1.0));
  const double a_star = k / (k - 1.0);
  const double g_star = g(a_star);
  const double feas_tol = 1e-8 * (xp + Q * std::pow(a_star, p));
  if (g_star < -feas_tol) return {true, 0.0};
  if (g_star <= feas_tol) return {false, a_star};  // tangency (Q = 1 gives a* = x)
  return {false, bisect(1.0, a_star)};
}

}  // namespace potlab
