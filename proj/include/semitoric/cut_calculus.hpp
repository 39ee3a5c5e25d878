#pragma once

// Changing cut directions (piecewise vertical shears), enumerating the
// presentations of one system, and normal forms under the group of maps
// (x, y) -> (x, j x + y + t).

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/validate.hpp"

namespace semitoric {

inline SemitoricPolygon apply_global_T(const SemitoricPolygon& p, const GlobalTElement& g) {
  std::vector<MarkedPoint> marks = p.marks();
  for (auto& m : marks) m.position = g(m.position);
  return SemitoricPolygon(apply_global_T(p.vertices(), g), std::move(marks));
}

namespace detail {

/// Drops vertices where the boundary does not turn (and repeated points).
inline std::vector<Point> drop_straight_vertices(std::vector<Point> pts) {
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point& a = pts[(i + pts.size() - 1) % pts.size()];
      const Point& b = pts[i];
      const Point& c = pts[(i + 1) % pts.size()];
      if (a == b || turn(a, b, c) == 0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return pts;
}

/// Sum of several vertical shears; each is the identity left of its pivot.
struct ShearSum {
  std::vector<VerticalShear> parts;

  Point operator()(const Point& p) const {
    Rational dy = 0;
    for (const auto& s : parts)
      if (p.x > s.pivot_x) dy += Rational(s.coefficient) * (p.x - s.pivot_x);
    return {p.x, p.y + dy};
  }
};

/// Applies the shears to the whole presentation. Boundary points on each pivot
/// column become vertices before the map; straight vertices are merged after.
inline SemitoricPolygon reshear(const SemitoricPolygon& p, const ShearSum& shears,
                                std::vector<MarkedPoint> new_marks) {
  std::vector<Point> boundary;
  const auto n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p.vertex(i);
    const Point& b = p.next(i);
    boundary.push_back(a);
    std::map<Rational, Point> crossings;  // keyed by edge parameter
    for (const auto& s : shears.parts) {
      const Rational& x = s.pivot_x;
      const bool strictly_between = (a.x < x && x < b.x) || (b.x < x && x < a.x);
      if (!strictly_between) continue;
      const Rational t = (x - a.x) / (b.x - a.x);
      crossings.emplace(t, Point{x, a.y + t * (b.y - a.y)});
    }
    for (const auto& [t, q] : crossings) boundary.push_back(q);
  }
  for (auto& q : boundary) q = shears(q);
  for (auto& m : new_marks) m.position = shears(m.position);
  return SemitoricPolygon(drop_straight_vertices(std::move(boundary)), std::move(new_marks));
}

inline void require_consistent(const SemitoricPolygon& p) {
  const auto r = validate(p);
  if (!r.valid) throw ValidationError("inconsistent presentation: " + describe(r));
}

}  // namespace detail

/// Flips the cut of mark entry i by shearing everything right of its column by
/// (old sign) * (multiplicity).
inline SemitoricPolygon switch_cut(const SemitoricPolygon& p, std::size_t i) {
  require_valid(p);
  if (i >= p.marks().size())
    throw DomainError("mark index " + std::to_string(i) + " out of range (" + std::to_string(p.marks().size()) +
                      " marks)");
  const auto& m = p.marks()[i];
  detail::ShearSum shears{{VerticalShear{m.position.x, Integer(m.cut_sign * m.multiplicity)}}};
  auto marks = p.marks();
  marks[i].cut_sign = -marks[i].cut_sign;
  auto out = detail::reshear(p, shears, std::move(marks));
  detail::require_consistent(out);
  return out;
}

using SignVector = std::vector<int>;

inline SignVector signs_of(const SemitoricPolygon& p) {
  SignVector s;
  for (const auto& m : p.marks()) s.push_back(m.cut_sign);
  return s;
}

struct PresentationSet {
  SemitoricPolygon base;
  std::vector<std::pair<SignVector, SemitoricPolygon>> members;
};

inline constexpr std::size_t kDefaultMarkBound = 16;

/// All 2^m whole-entry sign assignments. Member b flips the entries at the set
/// bits of b relative to the base signs, so member 0 is the input itself.
inline PresentationSet enumerate_presentations(const SemitoricPolygon& p,
                                               std::size_t mark_bound = kDefaultMarkBound) {
  require_valid(p);
  const std::size_t m = p.marks().size();
  if (m > mark_bound)
    throw DomainError(std::to_string(m) + " mark entries exceed the enumeration bound of " +
                      std::to_string(mark_bound));
  const std::size_t count = std::size_t{1} << m;
  std::vector<SemitoricPolygon> polys(count);
  polys[0] = p;
  for (std::size_t b = 1; b < count; ++b) {
    std::size_t high = 0;
    while ((b >> (high + 1)) != 0) ++high;
    polys[b] = switch_cut(polys[b ^ (std::size_t{1} << high)], high);
  }
  PresentationSet set{p, {}};
  set.members.reserve(count);
  for (auto& poly : polys) {
    SignVector s = signs_of(poly);
    set.members.emplace_back(std::move(s), std::move(poly));
  }
  return set;
}

/// Splits entry i so that `up` of its unit cuts point up and the rest down.
/// Entries stay in order; a split entry becomes (up, +1) followed by (down, -1).
inline SemitoricPolygon split_mark(const SemitoricPolygon& p, std::size_t i, int up) {
  require_valid(p);
  if (i >= p.marks().size()) throw DomainError("mark index " + std::to_string(i) + " out of range");
  const auto& m = p.marks()[i];
  if (up < 0 || up > m.multiplicity)
    throw DomainError("up-count " + std::to_string(up) + " outside [0, " + std::to_string(m.multiplicity) + "]");
  const int flipping = m.cut_sign > 0 ? m.multiplicity - up : up;
  detail::ShearSum shears{{VerticalShear{m.position.x, Integer(m.cut_sign * flipping)}}};
  std::vector<MarkedPoint> marks;
  for (std::size_t k = 0; k < p.marks().size(); ++k) {
    if (k != i) {
      marks.push_back(p.marks()[k]);
      continue;
    }
    if (up > 0) marks.push_back({m.position, up, 1});
    if (up < m.multiplicity) marks.push_back({m.position, m.multiplicity - up, -1});
  }
  auto out = detail::reshear(p, shears, std::move(marks));
  detail::require_consistent(out);
  return out;
}

/// One member of the refined family: up_counts[i] of entry i's unit cuts point up.
struct RefinedPresentation {
  std::vector<int> up_counts;
  SemitoricPolygon polygon;
};

inline constexpr std::size_t kDefaultRefinedBound = std::size_t{1} << 16;

/// Every presentation reachable when each focus-focus point picks its own cut:
/// the product over entries of (multiplicity + 1) up-count choices.
inline std::vector<RefinedPresentation> refined_presentations(const SemitoricPolygon& p,
                                                              std::size_t bound = kDefaultRefinedBound) {
  require_valid(p);
  const auto& marks = p.marks();
  std::size_t total = 1;
  for (const auto& m : marks) {
    total *= static_cast<std::size_t>(m.multiplicity) + 1;
    if (total > bound)
      throw DomainError("refined presentation count exceeds the bound of " + std::to_string(bound));
  }
  std::vector<RefinedPresentation> out;
  out.reserve(total);
  std::vector<int> up(marks.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    detail::ShearSum shears;
    std::vector<MarkedPoint> split;
    for (std::size_t i = 0; i < marks.size(); ++i) {
      const auto& m = marks[i];
      const int flipping = m.cut_sign > 0 ? m.multiplicity - up[i] : up[i];
      if (flipping != 0) shears.parts.push_back({m.position.x, Integer(m.cut_sign * flipping)});
      if (up[i] > 0) split.push_back({m.position, up[i], 1});
      if (up[i] < m.multiplicity) split.push_back({m.position, m.multiplicity - up[i], -1});
    }
    auto poly = detail::reshear(p, shears, std::move(split));
    detail::require_consistent(poly);
    out.push_back({up, std::move(poly)});
    for (std::size_t i = 0; i < up.size(); ++i) {
      if (++up[i] <= marks[i].multiplicity) break;
      up[i] = 0;
    }
  }
  return out;
}

/// The element of the vertical-line-preserving group that puts the polygon in
/// normal form: bottom-left corner at height 0, first bottom edge tangent (p, q)
/// with 0 <= q < p.
inline GlobalTElement canonical_T_element(const SemitoricPolygon& p) {
  const auto c = boundary_chains(p);
  const Point& origin = p.vertex(c.bottom[0]);
  const LatticeVector e = rightward_primitive(origin, p.vertex(c.bottom[1]));
  const Integer j = -floor_div(e.b, e.a);
  return {j, -(Rational(j) * origin.x + origin.y)};
}

inline SemitoricPolygon canonicalize_T(const SemitoricPolygon& p) {
  return apply_global_T(p, canonical_T_element(p));
}

}  // namespace semitoric
