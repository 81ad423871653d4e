#include "potlab/harmonic1d.hpp"

#include <cmath>
#include <sstream>

#include "potlab/errors.hpp"

namespace potlab {

double AffineInNu::operator()(double x) const {
  if (!std::isfinite(x)) throw InputError("AffineInNu: x must be finite");
  if (slope_ == 0.0) return value_at_base_;
  return value_at_base_ + slope_ * nu_signed(weight_, basepoint_, x);
}

AffineInNu fit_two_points(const Weight1D& w, const Interval& I,
                          std::pair<double, double> p1,
                          std::pair<double, double> p2) {
  auto [x1, u1] = p1;
  auto [x2, u2] = p2;
  if (!I.contains(x1) || !I.contains(x2)) {
    throw InputError("fit_two_points: abscissae must lie in I");
  }
  if (x1 == x2) throw DegenerateInterval("fit_two_points: x1 == x2");
  quad::Options opts;
  const double dnu = nu_signed(w, x1, x2, opts);
  if (std::abs(dnu) <= opts.abs_tol) {
    throw DegenerateInterval("fit_two_points: nu((x1,x2)) vanishes within tolerance");
  }
  const double slope = (u2 - u1) / dnu;
  return AffineInNu(slope, u1, x1, w);
}

double PiecewiseHarmonic1D::eval(double x) const {
  for (size_t i = 0; i < domain.components.size(); ++i) {
    if (domain.components[i].contains(x)) return pieces[i](x);
  }
  throw InputError("PiecewiseHarmonic1D: x outside the domain");
}

namespace {

// Nonconstant piece on the open interval J, increasing from 0 to 1 in nu.
AffineInNu unit_ramp(const Weight1D& w, const Interval& J) {
  const double nuJ = nu_measure(w, J);
  return AffineInNu(1.0 / nuJ, 0.0, J.lo, w);
}

AffineInNu zero_fn(const Weight1D& w) { return AffineInNu(0.0, 0.0, 0.0, w); }

}  // namespace

PiecewiseHarmonic1D weak_extend(const OpenSet1D& omega, const RelClosed1D& e,
                                const PiecewiseHarmonic1D& u) {
  std::vector<AffineInNu> extended;
  size_t piece_index = 0;
  for (size_t i = 0; i < omega.components.size(); ++i) {
    const auto rest = component_minus(omega.components[i], e.pieces[i]);
    if (rest.size() != 1) {
      std::ostringstream msg;
      msg << "weak_extend: component " << i
          << " of Omega has disconnected complement of E";
      throw Disconnected(msg.str(), static_cast<int>(i));
    }
    if (piece_index >= u.pieces.size()) {
      throw InputError("weak_extend: u must carry one piece per component of Omega\\E");
    }
    // The representation is global in x; the same (slope, value) pair is the
    // unique A-harmonic extension to the whole component.
    extended.push_back(u.pieces[piece_index++]);
  }
  return PiecewiseHarmonic1D{omega, std::move(extended)};
}

PiecewiseHarmonic1D disconnection_witness(const OpenSet1D& omega,
                                          const RelClosed1D& e,
                                          const Weight1D& w, int component) {
  std::vector<Interval> domain;
  std::vector<AffineInNu> pieces;
  for (size_t i = 0; i < omega.components.size(); ++i) {
    const auto rest = component_minus(omega.components[i], e.pieces[i]);
    for (size_t k = 0; k < rest.size(); ++k) {
      domain.push_back(rest[k]);
      const bool on_v = (static_cast<int>(i) == component && k == 0);
      pieces.push_back(AffineInNu(0.0, on_v ? 1.0 : 0.0, rest[k].lo, w));
    }
  }
  return PiecewiseHarmonic1D{OpenSet1D::make(std::move(domain)), std::move(pieces)};
}

Verdict1D decide_removable_1d(const OpenSet1D& omega, const RelClosed1D& e,
                              const Weight1D& w) {
  for (size_t i = 0; i < omega.components.size(); ++i) {
    const auto rest = component_minus(omega.components[i], e.pieces[i]);
    if (rest.size() != 1) {
      return Verdict1D{Removability1D::NonRemovableDisconnected, std::nullopt,
                       disconnection_witness(omega, e, w, static_cast<int>(i)),
                       "disconnected-complement"};
    }
  }
  const RatioResult ratio = lebesgue_ratio(omega, e);
  if (std::isfinite(ratio.C)) {
    return Verdict1D{Removability1D::Removable, ratio.C, std::nullopt,
                     "connected-complements-with-bounded-length-ratio"};
  }
  // A finite component list can only fail the ratio via an unbounded component
  // whose complement of E has finite length.
  std::vector<Interval> domain;
  std::vector<AffineInNu> pieces;
  for (size_t i = 0; i < omega.components.size(); ++i) {
    const Interval rest = component_minus(omega.components[i], e.pieces[i])[0];
    domain.push_back(rest);
    const bool flagged = (ratio.worst_component &&
                          static_cast<int>(i) == *ratio.worst_component);
    pieces.push_back(flagged ? unit_ramp(w, rest) : zero_fn(w));
  }
  return Verdict1D{Removability1D::NonRemovableUnbounded, std::nullopt,
                   PiecewiseHarmonic1D{OpenSet1D::make(std::move(domain)),
                                       std::move(pieces)},
                   "unbounded-component-with-finite-complement"};
}

Verdict1D decide_removable_1d(const ComponentFamily& family, const Weight1D& w,
                              const FamilyProbe& probe) {
  // Connectivity spot-check on the sampled components.
  for (int ex = 0; ex <= probe.max_exponent; ++ex) {
    auto [I, pieces] = family.generate(1 << ex);
    if (component_minus(I, pieces).size() != 1) {
      return Verdict1D{Removability1D::NonRemovableDisconnected, std::nullopt,
                       std::nullopt, "disconnected-complement"};
    }
  }
  const RatioResult ratio = lebesgue_ratio(family, probe);
  if (std::isfinite(ratio.C)) {
    return Verdict1D{Removability1D::Removable, ratio.C, std::nullopt,
                     "connected-complements-with-bounded-length-ratio"};
  }
  // Oscillating witness, truncated to the first few components: 0..1 ramp in
  // nu on each complement, sup - inf = 1 per component.
  std::vector<Interval> domain;
  std::vector<AffineInNu> pieces;
  for (int j = 1; j <= 8; ++j) {
    auto [I, ps] = family.generate(j);
    const Interval rest = component_minus(I, ps)[0];
    domain.push_back(rest);
    pieces.push_back(unit_ramp(w, rest));
  }
  return Verdict1D{Removability1D::NonRemovableUnbounded, std::nullopt,
                   PiecewiseHarmonic1D{OpenSet1D::make(std::move(domain)),
                                       std::move(pieces)},
                   "ratio-sequence-unbounded"};
}

double bounded_extension_bound(const OpenSet1D& omega, const RelClosed1D& e,
                               const Weight1D& w, double sup_norm) {
  const Verdict1D v = decide_removable_1d(omega, e, w);
  if (v.status != Removability1D::Removable) {
    throw NotRemovable("bounded_extension_bound: configuration is not removable");
  }
  return nu_ratio(omega, e, w).C * sup_norm;
}

}  // namespace potlab
