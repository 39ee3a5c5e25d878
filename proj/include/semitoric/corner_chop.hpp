#pragma once

// Corner chopping (toric blow-up) at a Delzant vertex.

#include <algorithm>
#include <string>
#include <vector>

#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"
#include "semitoric/karshon_graph.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/validate.hpp"
#include "semitoric/vertex_analysis.hpp"

namespace semitoric {

namespace detail {

/// Number of primitive steps from `from` to `to` along `dir`.
inline Rational lattice_length(const Point& from, const Point& to, const LatticeVector& dir) {
  if (dir.a != 0) return (to.x - from.x) / Rational(dir.a);
  return (to.y - from.y) / Rational(dir.b);
}

inline Point step(const Point& v, const LatticeVector& dir, const Rational& t) {
  return {v.x + t * Rational(dir.a), v.y + t * Rational(dir.b)};
}

}  // namespace detail

/// Replaces the Delzant vertex v by v + delta u' and v + delta w', where u', w'
/// are the outgoing primitive tangents. The b2 of the graph goes up by one.
inline SemitoricPolygon corner_chop(const SemitoricPolygon& p, const Point& v, const Rational& delta) {
  require_valid(p);
  const auto idx = require_vertex(p, v);
  const auto vc = classify_vertex(p, v);
  if (vc.kind != VertexKind::Delzant) throw DomainError("vertex is not Delzant: " + to_string(v));
  if (delta <= 0) throw DomainError("chop size must be positive, got " + to_string(delta));

  const Point& before = p.prev(idx);
  const Point& after = p.next(idx);
  const LatticeVector to_before = primitive_direction(v, before);
  const LatticeVector to_after = primitive_direction(v, after);
  if (delta >= detail::lattice_length(v, before, to_before))
    throw DomainError("chop size " + to_string(delta) + " reaches past the edge to " + to_string(before));
  if (delta >= detail::lattice_length(v, after, to_after))
    throw DomainError("chop size " + to_string(delta) + " reaches past the edge to " + to_string(after));

  const Point a = detail::step(v, to_before, delta);
  const Point b = detail::step(v, to_after, delta);
  const Rational lo = std::min({v.x, a.x, b.x});
  const Rational hi = std::max({v.x, a.x, b.x});
  for (const auto& m : p.marks())
    if (lo <= m.position.x && m.position.x <= hi)
      throw DomainError("chopped corner overlaps the column of the mark at " + to_string(m.position));

  std::vector<Point> vs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != idx) {
      vs.push_back(p.vertex(i));
      continue;
    }
    vs.push_back(a);
    vs.push_back(b);
  }
  SemitoricPolygon out(std::move(vs), p.marks());
  const auto report = validate(out);
  if (!report.valid) throw DomainError("chopped polygon is invalid: " + describe(report));

  const int b2_before = betti_b2(build_graph(p));
  const int b2_after = betti_b2(build_graph(out));
  if (b2_after != b2_before + 1)
    throw InvariantViolation("corner chop changed b2 from " + std::to_string(b2_before) + " to " +
                             std::to_string(b2_after));
  return out;
}

}  // namespace semitoric
