#include "potlab/weights1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "potlab/errors.hpp"

namespace potlab {
namespace {

double integrate_density(const std::function<double(double)>& f,
                         const Weight1D& w, double a, double b,
                         const quad::Options& opts) {
  return quad::integrate(f, a, b, w.singular_points(), opts).value;
}

double ratio_of(double num, double den) {
  if (std::isinf(num) && std::isinf(den)) return 1.0;  // inf/inf convention
  if (std::isinf(num)) return kInf;
  return num / den;
}

template <typename MeasureFn>
RatioResult sup_ratio(const OpenSet1D& omega, const RelClosed1D& e,
                      MeasureFn measure) {
  RatioResult out{0.0, std::nullopt};
  for (size_t i = 0; i < omega.components.size(); ++i) {
    const Interval& I = omega.components[i];
    const auto rest = component_minus(I, e.pieces[i]);
    double rest_measure = 0.0;
    for (const auto& J : rest) rest_measure += measure(J);
    const double r = ratio_of(measure(I), rest_measure);
    if (r > out.C || !out.worst_component) {
      out.C = r;
      out.worst_component = static_cast<int>(i);
    }
  }
  if (omega.components.empty()) out.C = 1.0;
  return out;
}

template <typename MeasureFn>
RatioResult sup_ratio_family(const ComponentFamily& family,
                             const FamilyProbe& probe, MeasureFn measure) {
  RatioResult out{0.0, std::nullopt};
  double prev = -1.0;
  bool nondecreasing = true;
  for (int e = 0; e <= probe.max_exponent; ++e) {
    const int j = 1 << e;
    auto [I, pieces] = family.generate(j);
    std::sort(pieces.begin(), pieces.end(),
              [](const ClosedPiece& a, const ClosedPiece& b) { return a.lo < b.lo; });
    const auto rest = component_minus(I, pieces);
    double rest_measure = 0.0;
    for (const auto& J : rest) rest_measure += measure(J);
    const double r = ratio_of(measure(I), rest_measure);
    if (r > out.C || !out.worst_component) {
      out.C = r;
      out.worst_component = j;
    }
    if (std::isinf(r) && !(std::isinf(measure(I)) && r == 1.0)) break;
    if (prev >= 0.0 && r < prev) nondecreasing = false;
    prev = r;
  }
  if (nondecreasing && out.C >= probe.unbounded_at) out.C = kInf;
  return out;
}

}  // namespace

double nu_measure(const Weight1D& w, const Interval& I, const quad::Options& opts) {
  if (I.empty()) return 0.0;
  if (!I.bounded()) return kInf;  // nu(I) < inf iff I bounded
  auto v = [&w](double x) { return w.dual_density(x); };
  return integrate_density(v, w, I.lo, I.hi, opts);
}

double nu_signed(const Weight1D& w, double from, double to, const quad::Options& opts) {
  if (from == to) return 0.0;
  const double s = (to > from) ? 1.0 : -1.0;
  return s * nu_measure(w, {std::min(from, to), std::max(from, to)}, opts);
}

ApEstimate ap_constant(const Weight1D& w, std::span<const Interval> probe) {
  if (probe.empty()) throw InputError("ap_constant: probe family must be nonempty");
  const double pm1 = w.exponent().p() - 1.0;
  ApEstimate est;
  est.probes = probe.size();
  est.lower_bound = 0.0;
  quad::Options opts;
  for (const Interval& I : probe) {
    if (!I.bounded() || I.empty()) {
      throw InputError("ap_constant: probe intervals must be bounded and nonempty");
    }
    const double len = I.length();
    const double avg_w =
        integrate_density([&w](double x) { return w(x); }, w, I.lo, I.hi, opts) / len;
    const double avg_v =
        integrate_density([&w](double x) { return w.dual_density(x); }, w, I.lo,
                          I.hi, opts) / len;
    est.lower_bound = std::max(est.lower_bound, avg_w * std::pow(avg_v, pm1));
  }
  std::ostringstream desc;
  desc << probe.size() << " bounded open intervals";
  est.probe_description = desc.str();
  return est;
}

std::vector<Interval> dyadic_probe(double lo, double hi, int min_scale,
                                   int max_scale, int centers_per_scale) {
  if (!(hi > lo)) throw InputError("dyadic_probe: require lo < hi");
  std::vector<Interval> probe;
  for (int s = min_scale; s <= max_scale; ++s) {
    const double half = 0.5 * std::pow(2.0, s);
    for (int c = 0; c < centers_per_scale; ++c) {
      const double t = (centers_per_scale == 1)
                           ? 0.5
                           : static_cast<double>(c) / (centers_per_scale - 1);
      const double center = lo + t * (hi - lo);
      probe.push_back({center - half, center + half});
    }
  }
  return probe;
}

RatioResult lebesgue_ratio(const OpenSet1D& omega, const RelClosed1D& e) {
  return sup_ratio(omega, e, [](const Interval& I) { return I.length(); });
}

RatioResult nu_ratio(const OpenSet1D& omega, const RelClosed1D& e, const Weight1D& w) {
  return sup_ratio(omega, e, [&w](const Interval& I) { return nu_measure(w, I); });
}

RatioResult lebesgue_ratio(const ComponentFamily& family, const FamilyProbe& probe) {
  return sup_ratio_family(family, probe,
                          [](const Interval& I) { return I.length(); });
}

RatioResult nu_ratio(const ComponentFamily& family, const Weight1D& w,
                     const FamilyProbe& probe) {
  return sup_ratio_family(family, probe,
                          [&w](const Interval& I) { return nu_measure(w, I); });
}

}  // namespace potlab
