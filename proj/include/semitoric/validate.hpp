#pragma once

// Full structural validation of a candidate presentation. Failures are
// collected into a report rather than thrown.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/vertex_analysis.hpp"

namespace semitoric {

struct Violation {
  std::string rule;      // stable identifier, e.g. "cut-endpoint"
  std::string location;  // vertex, mark index or empty
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::optional<VertexClassification>> vertices;  // empty when structure is broken
  std::vector<Violation> violations;

  void add(std::string rule, std::string location, std::string message) {
    violations.push_back({std::move(rule), std::move(location), std::move(message)});
    valid = false;
  }
};

inline ValidationReport validate(const SemitoricPolygon& p) {
  ValidationReport r;
  const auto n = p.size();
  if (n < 3) {
    r.add("vertex-count", "", "a polygon needs at least 3 vertices, got " + std::to_string(n));
    return r;
  }
  {
    std::set<Point> seen;
    for (const auto& v : p.vertices())
      if (!seen.insert(v).second) r.add("distinct-vertices", to_string(v), "vertex listed twice");
  }
  if (!r.valid) return r;
  if (doubled_signed_area(p.vertices()) <= 0) {
    r.add("orientation", "", "vertices are not counter-clockwise");
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (turn(p.prev(i), p.vertex(i), p.next(i)) <= 0)
      r.add("strict-convexity", to_string(p.vertex(i)), "vertex is not a strictly convex corner");
  }
  if (!r.valid) return r;

  const auto chains = boundary_chains(p);
  const Rational xmin = p.j_min();
  const Rational xmax = p.j_max();

  bool marks_ok = true;
  for (std::size_t i = 0; i < p.marks().size(); ++i) {
    const auto& m = p.marks()[i];
    const std::string where = "mark " + std::to_string(i) + " " + to_string(m.position);
    if (m.multiplicity < 1) {
      r.add("mark-multiplicity", where, "multiplicity must be >= 1");
      marks_ok = false;
    }
    if (m.cut_sign != 1 && m.cut_sign != -1) {
      r.add("mark-cut-sign", where, "cut must be +1 or -1");
      marks_ok = false;
    }
    if (m.position.x <= xmin || m.position.x >= xmax) {
      r.add("mark-column", where, "marked point must satisfy J_min < x < J_max");
      marks_ok = false;
      continue;
    }
    const Slice s = slice_heights(p, chains, m.position.x);
    if (m.position.y <= s.bottom || m.position.y >= s.top) {
      r.add("mark-interior", where, "marked point is not strictly inside the polygon");
      marks_ok = false;
    }
    if (m.cut_sign == 1 || m.cut_sign == -1) {
      const Point end = cut_endpoint(p, chains, m);
      if (!p.index_of(end)) {
        r.add("cut-endpoint", where, "cut endpoint " + to_string(end) + " is not a vertex");
        marks_ok = false;
      }
    }
  }
  if (!marks_ok) return r;

  r.vertices.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& v = p.vertex(i);
    try {
      r.vertices[i] = classify_vertex(p, chains, i);
    } catch (const ValidationError& e) {
      r.add("vertex-class", to_string(v), e.what());
      continue;
    }
    const auto& vc = *r.vertices[i];
    if (vc.extreme && vc.kind != VertexKind::Delzant)
      r.add("extreme-delzant", to_string(v), "vertices on x = J_min or x = J_max must be Delzant");
    if (vc.on_vertical_edge) {
      const Point& other = p.prev(i).x == v.x ? p.next(i) : p.prev(i);
      if (abs(rightward_primitive(v, other).a) != 1)
        r.add("vertical-edge-slope", to_string(v),
              "the non-vertical edge at a vertical-edge vertex must have primitive first component 1");
    }
  }
  return r;
}

inline std::string describe(const ValidationReport& r) {
  std::string s;
  for (const auto& v : r.violations) {
    if (!s.empty()) s += "; ";
    s += v.rule;
    if (!v.location.empty()) s += " at " + v.location;
    s += ": " + v.message;
  }
  return s;
}

/// A ValidationError carrying the full report.
class ValidationFailure : public ValidationError {
 public:
  explicit ValidationFailure(ValidationReport r)
      : ValidationError("invalid polygon: " + describe(r)), report_(std::move(r)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Throws ValidationFailure unless the polygon is a valid presentation.
inline void require_valid(const SemitoricPolygon& p) {
  auto r = validate(p);
  if (!r.valid) throw ValidationFailure(std::move(r));
}

}  // namespace semitoric
