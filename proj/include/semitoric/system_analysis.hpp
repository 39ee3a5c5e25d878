#pragma once

// System-level invariants read off a presentation: the Duistermaat-Heckman
// density and its jump identity, orbit counts, adaptability, and the
// self-intersection of fixed spheres.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semitoric/cut_calculus.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/validate.hpp"
#include "semitoric/vertex_analysis.hpp"

namespace semitoric {

/// Continuous, affine between consecutive breakpoints.
struct PiecewiseLinear {
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;

  Rational operator()(const Rational& x) const {
    if (breakpoints.empty() || x < breakpoints.front() || x > breakpoints.back())
      throw DomainError("x = " + to_string(x) + " outside the breakpoint range");
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
      if (x > breakpoints[k + 1]) continue;
      const Rational& a = breakpoints[k];
      const Rational& b = breakpoints[k + 1];
      return values[k] + (values[k + 1] - values[k]) * (x - a) / (b - a);
    }
    return values.back();
  }

  /// Slope on [breakpoints[k], breakpoints[k+1]].
  Rational slope(std::size_t k) const {
    return (values[k + 1] - values[k]) / (breakpoints[k + 1] - breakpoints[k]);
  }

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;
};

namespace detail {

inline std::vector<Rational> critical_xs(const SemitoricPolygon& p) {
  std::set<Rational> xs;
  for (const auto& v : p.vertices()) xs.insert(v.x);
  for (const auto& m : p.marks()) xs.insert(m.position.x);
  return {xs.begin(), xs.end()};
}

/// Slope of the boundary path immediately left (or right) of x.
inline Rational path_slope(const SemitoricPolygon& p, const std::vector<std::size_t>& path, const Rational& x,
                           bool right_of_x) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const Point& a = p.vertex(path[k]);
    const Point& b = p.vertex(path[k + 1]);
    const bool hit = right_of_x ? (a.x <= x && x < b.x) : (a.x < x && x <= b.x);
    if (hit) return (b.y - a.y) / (b.x - a.x);
  }
  throw DomainError("no boundary edge beside x = " + to_string(x));
}

}  // namespace detail

/// rho(x) = length of the vertical slice of the polygon at x.
inline PiecewiseLinear dh_function(const SemitoricPolygon& p) {
  require_valid(p);
  const auto c = boundary_chains(p);
  PiecewiseLinear f;
  f.breakpoints = detail::critical_xs(p);
  for (const auto& x : f.breakpoints) {
    const Slice s = slice_heights(p, c, x);
    f.values.push_back(s.top - s.bottom);
  }
  return f;
}

struct JumpEntry {
  Rational x;
  Rational left_slope;   // of rho
  Rational right_slope;  // of rho
  Rational observed;
  Rational predicted;
  Rational e_plus;   // top boundary
  Rational e_minus;  // bottom boundary
  int j_x = 0;
  bool consistent = false;
};

struct JumpReport {
  std::vector<JumpEntry> entries;

  bool consistent() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.consistent; });
  }
};

/// Compares the change of slope of rho at every interior breakpoint with
/// -e^+ - e^- - j_x, where e = -1/(a b) at an elliptic-elliptic vertex with
/// isotropy weights {a, b} and 0 elsewhere.
inline JumpReport dh_jump_report(const SemitoricPolygon& p) {
  require_valid(p);
  const auto c = boundary_chains(p);
  const auto classes = classify_all(p, c);
  const auto xs = detail::critical_xs(p);

  auto e_at = [&](const Point& q) -> Rational {
    const auto idx = p.index_of(q);
    if (!idx || classes[*idx].kind == VertexKind::Fake) return 0;
    const auto [a, b] = isotropy_weights(p, c, *idx);
    return Rational(-1) / Rational(a * b);
  };

  JumpReport r;
  for (std::size_t k = 1; k + 1 < xs.size(); ++k) {
    const Rational& x = xs[k];
    JumpEntry e;
    e.x = x;
    const Rational top_l = detail::path_slope(p, c.top, x, false);
    const Rational top_r = detail::path_slope(p, c.top, x, true);
    const Rational bot_l = detail::path_slope(p, c.bottom, x, false);
    const Rational bot_r = detail::path_slope(p, c.bottom, x, true);
    e.left_slope = top_l - bot_l;
    e.right_slope = top_r - bot_r;
    e.observed = e.right_slope - e.left_slope;
    const Slice s = slice_heights(p, c, x);
    e.e_plus = e_at({x, s.top});
    e.e_minus = e_at({x, s.bottom});
    for (const auto& m : p.marks())
      if (m.position.x == x) e.j_x += m.multiplicity;
    e.predicted = -e.e_plus - e.e_minus - e.j_x;
    e.consistent = e.observed == e.predicted;
    r.entries.push_back(std::move(e));
  }
  return r;
}

struct OrbitCounts {
  int E = 0;   // elliptic-elliptic fixed points
  int FF = 0;  // focus-focus points, with multiplicity
  int S = 0;   // Z_k-spheres crossing the level

  int total() const { return E + FF + S; }
  friend bool operator==(const OrbitCounts&, const OrbitCounts&) = default;
};

inline OrbitCounts orbit_counts(const SemitoricPolygon& p, const Rational& x) {
  require_valid(p);
  if (x <= p.j_min() || x >= p.j_max())
    throw DomainError("orbit counts need J_min < x < J_max, got x = " + to_string(x));
  const auto c = boundary_chains(p);
  const auto classes = classify_all(p, c);
  OrbitCounts oc;
  for (const auto& vc : classes)
    if (vc.vertex.x == x && vc.kind != VertexKind::Fake && !vc.on_vertical_edge) ++oc.E;
  for (const auto& m : p.marks())
    if (m.position.x == x) oc.FF += m.multiplicity;
  for (const auto& ch : zk_chains(p, c, classes))
    if (ch.start_vertex.x < x && x < ch.end_vertex.x) ++oc.S;
  return oc;
}

/// Per-entry cut pattern, e.g. "+-" for one unit cut up and one down.
inline std::string cut_pattern(const SemitoricPolygon& p, const std::vector<int>& up_counts) {
  std::string s;
  for (std::size_t i = 0; i < up_counts.size(); ++i) {
    if (i) s += ' ';
    s += std::string(static_cast<std::size_t>(up_counts[i]), '+');
    s += std::string(static_cast<std::size_t>(p.marks()[i].multiplicity - up_counts[i]), '-');
  }
  return s;
}

struct AdaptabilityVerdict {
  bool adaptable = false;
  std::vector<std::pair<Rational, OrbitCounts>> violating_levels;
  std::vector<std::vector<int>> delzant_presentations;  // up-counts per mark entry
  bool criteria_agree = true;
};

/// Runs both characterizations: every level carries at most two non-free
/// orbits, and some choice of cuts gives a Delzant polygon. They must agree.
inline AdaptabilityVerdict adaptability(const SemitoricPolygon& p, std::size_t bound = kDefaultRefinedBound) {
  require_valid(p);
  AdaptabilityVerdict v;
  for (const auto& x : detail::critical_xs(p)) {
    if (x == p.j_min() || x == p.j_max()) continue;
    const auto oc = orbit_counts(p, x);
    if (oc.total() > 2) v.violating_levels.emplace_back(x, oc);
  }
  for (const auto& rp : refined_presentations(p, bound))
    if (is_delzant_polygon(rp.polygon)) v.delzant_presentations.push_back(rp.up_counts);

  const bool by_levels = v.violating_levels.empty();
  const bool by_presentations = !v.delzant_presentations.empty();
  v.criteria_agree = by_levels == by_presentations;
  if (!v.criteria_agree)
    throw InvariantViolation(std::string("adaptability criteria disagree: orbit counts say ") +
                             (by_levels ? "adaptable" : "non-adaptable") + ", presentations say " +
                             (by_presentations ? "adaptable" : "non-adaptable"));
  v.adaptable = by_levels;
  return v;
}

/// Every Delzant polygon among the presentations, in normal form, without repeats.
inline std::vector<SemitoricPolygon> delzant_presentations(const SemitoricPolygon& p,
                                                           std::size_t bound = kDefaultRefinedBound) {
  std::vector<SemitoricPolygon> out;
  for (const auto& rp : refined_presentations(p, bound)) {
    if (!is_delzant_polygon(rp.polygon)) continue;
    auto q = canonicalize_T(rp.polygon);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

/// Self-intersection of the fixed sphere over a vertical edge. On the left,
/// with outgoing primitives (1, a) at the bottom end and (1, b) at the top end,
/// this is a - b; the right side is the mirror image under x -> -x.
inline Integer self_intersection(const SemitoricPolygon& p, Side side) {
  require_valid(p);
  const auto c = boundary_chains(p);
  const auto& edge = side == Side::Left ? c.left_vertical : c.right_vertical;
  if (!edge) throw DomainError(std::string("no vertical edge on the ") + to_string(side) + " side");
  const std::size_t along = side == Side::Left ? 1 : c.bottom.size() - 2;
  const Point& lo = p.vertex(edge->lower);
  const Point& hi = p.vertex(edge->upper);
  LatticeVector down = primitive_direction(lo, p.vertex(c.bottom[along]));
  LatticeVector up = primitive_direction(hi, p.vertex(c.top[side == Side::Left ? 1 : c.top.size() - 2]));
  if (side == Side::Right) {
    down.a = -down.a;
    up.a = -up.a;
  }
  if (down.a != 1 || up.a != 1)
    throw InvariantViolation("outgoing edge at a vertical edge without first component 1");
  return down.b - up.b;
}

}  // namespace semitoric
