#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "potlab/quadrature.hpp"
#include "potlab/sets1d.hpp"
#include "potlab/weight.hpp"

namespace potlab {

// nu(I) = int_I w^{1/(1-p)} dx. Returns +inf for unbounded I; throws
// NonIntegrable if the quadrature detects divergence on a bounded I.
double nu_measure(const Weight1D& w, const Interval& I,
                  const quad::Options& opts = {});

// Signed nu-distance from `from` to `to` (negative when to < from).
double nu_signed(const Weight1D& w, double from, double to,
                 const quad::Options& opts = {});

struct ApEstimate {
  double lower_bound = 1.0;
  size_t probes = 0;
  std::string probe_description;
};

// Supremum over the probe family of (avg_I w) (avg_I w^{1/(1-p)})^{p-1};
// a certified lower bound for the Muckenhoupt A_p constant.
ApEstimate ap_constant(const Weight1D& w, std::span<const Interval> probe);

// Default probe: dyadic intervals centered on a lattice across [lo, hi],
// scales 2^min_scale .. 2^max_scale.
std::vector<Interval> dyadic_probe(double lo, double hi, int min_scale = -20,
                                   int max_scale = 20, int centers_per_scale = 9);

struct RatioResult {
  double C = 1.0;                         // +inf when the criterion fails
  std::optional<int> worst_component;     // index (or family index j)
};

// sup over components I of |I| / |I \ E|, with the convention inf/inf = 1
// for components whose I \ E is unbounded.
RatioResult lebesgue_ratio(const OpenSet1D& omega, const RelClosed1D& e);

// Same with the measure nu in place of Lebesgue measure.
RatioResult nu_ratio(const OpenSet1D& omega, const RelClosed1D& e,
                     const Weight1D& w);

struct FamilyProbe {
  int max_exponent = 20;      // sample j = 1, 2, 4, ..., 2^max_exponent
  double unbounded_at = 1e6;  // nondecreasing ratios beyond this => C = inf
};

RatioResult lebesgue_ratio(const ComponentFamily& family,
                           const FamilyProbe& probe = {});
RatioResult nu_ratio(const ComponentFamily& family, const Weight1D& w,
                     const FamilyProbe& probe = {});

}  // namespace potlab
