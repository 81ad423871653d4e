#include "potlab/sets1d.hpp"

#include <algorithm>

#include "potlab/errors.hpp"

namespace potlab {

OpenSet1D OpenSet1D::make(std::vector<Interval> comps) {
  for (const auto& c : comps) {
    if (c.empty()) throw InputError("OpenSet1D: empty component interval");
  }
  std::sort(comps.begin(), comps.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (size_t i = 0; i + 1 < comps.size(); ++i) {
    if (!(comps[i].hi <= comps[i + 1].lo)) {
      throw InputError("OpenSet1D: components must be pairwise disjoint");
    }
  }
  OpenSet1D s;
  s.components = std::move(comps);
  return s;
}

RelClosed1D RelClosed1D::make(const OpenSet1D& omega,
                              std::vector<std::vector<ClosedPiece>> pieces) {
  if (pieces.size() != omega.components.size()) {
    throw InputError("RelClosed1D: one piece list per component of Omega required");
  }
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Interval& I = omega.components[i];
    auto& ps = pieces[i];
    std::sort(ps.begin(), ps.end(),
              [](const ClosedPiece& a, const ClosedPiece& b) { return a.lo < b.lo; });
    for (size_t j = 0; j < ps.size(); ++j) {
      if (!(ps[j].lo <= ps[j].hi)) throw InputError("RelClosed1D: piece with lo > hi");
      if (ps[j].hi <= I.lo || ps[j].lo >= I.hi) {
        throw InputError("RelClosed1D: piece outside its component (E must lie in Omega)");
      }
      if (j > 0 && !(ps[j - 1].hi < ps[j].lo)) {
        throw InputError("RelClosed1D: pieces must be disjoint and sorted");
      }
    }
    if (component_minus(I, ps).empty()) {
      throw InputError("RelClosed1D: a component of Omega is contained in E");
    }
  }
  RelClosed1D e;
  e.pieces = std::move(pieces);
  return e;
}

std::vector<Interval> component_minus(const Interval& I,
                                      const std::vector<ClosedPiece>& pieces) {
  std::vector<Interval> out;
  double cursor = I.lo;
  for (const auto& p : pieces) {
    const double lo = std::max(p.lo, I.lo);
    const double hi = std::min(p.hi, I.hi);
    if (lo > cursor) out.push_back({cursor, lo});
    cursor = std::max(cursor, hi);
  }
  if (cursor < I.hi) out.push_back({cursor, I.hi});
  return out;
}

}  // namespace potlab
