#pragma once

// The presentation data model: a rational convex polygon with marked interior
// points, each carrying a multiplicity and a vertical cut direction.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"

namespace semitoric {

struct MarkedPoint {
  Point position;
  int multiplicity = 1;
  int cut_sign = -1;  // +1: cut runs up to the top boundary, -1: down to the bottom

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

class SemitoricPolygon {
 public:
  SemitoricPolygon() = default;

  /// Vertices are expected counter-clockwise; the cycle is rotated so that it
  /// starts at the lexicographically smallest (x, y) vertex.
  SemitoricPolygon(std::vector<Point> vertices, std::vector<MarkedPoint> marks)
      : vertices_(std::move(vertices)), marks_(std::move(marks)) {
    if (!vertices_.empty()) {
      auto first = std::min_element(vertices_.begin(), vertices_.end());
      std::rotate(vertices_.begin(), first, vertices_.end());
    }
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<MarkedPoint>& marks() const { return marks_; }
  std::size_t size() const { return vertices_.size(); }

  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const Point& next(std::size_t i) const { return vertex(i + 1); }
  const Point& prev(std::size_t i) const { return vertex(i + vertices_.size() - 1); }

  std::optional<std::size_t> index_of(const Point& p) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  Rational j_min() const {
    return std::min_element(vertices_.begin(), vertices_.end(),
                            [](const Point& a, const Point& b) { return a.x < b.x; })
        ->x;
  }
  Rational j_max() const {
    return std::max_element(vertices_.begin(), vertices_.end(),
                            [](const Point& a, const Point& b) { return a.x < b.x; })
        ->x;
  }

  /// m_f: the number of focus-focus points, i.e. the summed multiplicities.
  int total_multiplicity() const {
    int m = 0;
    for (const auto& mk : marks_) m += mk.multiplicity;
    return m;
  }

  friend bool operator==(const SemitoricPolygon&, const SemitoricPolygon&) = default;

 private:
  std::vector<Point> vertices_;
  std::vector<MarkedPoint> marks_;
};

/// Twice the signed area (shoelace).
inline Rational doubled_signed_area(const std::vector<Point>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

/// At least three pairwise distinct vertices with a strict left turn at each.
inline bool is_strictly_convex_ccw(const SemitoricPolygon& p) {
  const auto n = p.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (turn(p.prev(i), p.vertex(i), p.next(i)) <= 0) return false;
  }
  return doubled_signed_area(p.vertices()) > 0;
}

/// Index pair (lower, upper) of a vertical edge.
struct VerticalEdge {
  std::size_t lower;
  std::size_t upper;

  friend bool operator==(const VerticalEdge&, const VerticalEdge&) = default;
};

struct BoundaryChains {
  std::vector<std::size_t> bottom;  // left to right
  std::vector<std::size_t> top;     // left to right
  std::optional<VerticalEdge> left_vertical;
  std::optional<VerticalEdge> right_vertical;
};

/// Splits the boundary into bottom and top paths running from J_min to J_max.
inline BoundaryChains boundary_chains(const SemitoricPolygon& p) {
  if (!is_strictly_convex_ccw(p))
    throw ValidationError("degenerate polygon: vertices are not in strictly convex counter-clockwise position");
  const auto n = p.size();
  const Rational xmin = p.j_min();
  const Rational xmax = p.j_max();

  // Vertex 0 is the lexicographically smallest, i.e. the bottom-left corner.
  BoundaryChains c;
  std::size_t i = 0;
  c.bottom.push_back(0);
  while (p.vertex(i).x < xmax) {
    i = (i + 1) % n;
    c.bottom.push_back(i);
  }
  const std::size_t bottom_right = i;
  std::size_t top_right = bottom_right;
  if (p.next(bottom_right).x == xmax) {
    top_right = (bottom_right + 1) % n;
    c.right_vertical = VerticalEdge{bottom_right, top_right};
  }
  i = top_right;
  std::vector<std::size_t> top_rev{i};
  while (p.vertex(i).x > xmin) {
    i = (i + 1) % n;
    top_rev.push_back(i);
  }
  const std::size_t top_left = i;
  if (top_left != 0) c.left_vertical = VerticalEdge{0, top_left};
  c.top.assign(top_rev.rbegin(), top_rev.rend());
  return c;
}

namespace detail {

inline Rational height_on_path(const SemitoricPolygon& p, const std::vector<std::size_t>& path,
                               const Rational& x) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const Point& a = p.vertex(path[k]);
    const Point& b = p.vertex(path[k + 1]);
    if (a.x <= x && x <= b.x) {
      if (x == a.x) return a.y;
      if (x == b.x) return b.y;
      return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
  }
  // Single-vertex path: only its own column.
  return p.vertex(path.front()).y;
}

}  // namespace detail

struct Slice {
  Rational bottom;
  Rational top;

  friend bool operator==(const Slice&, const Slice&) = default;
};

inline Slice slice_heights(const SemitoricPolygon& p, const BoundaryChains& c, const Rational& x) {
  if (x < p.j_min() || x > p.j_max()) throw DomainError("x = " + to_string(x) + " lies outside [J_min, J_max]");
  return {detail::height_on_path(p, c.bottom, x), detail::height_on_path(p, c.top, x)};
}

/// The intersection of the polygon with the vertical line at x.
inline Slice slice_heights(const SemitoricPolygon& p, const Rational& x) {
  return slice_heights(p, boundary_chains(p), x);
}

/// Where a mark's cut meets the boundary: the top point of its column for an
/// upward cut, the bottom point for a downward one.
inline Point cut_endpoint(const SemitoricPolygon& p, const BoundaryChains& c, const MarkedPoint& m) {
  const Slice s = slice_heights(p, c, m.position.x);
  return {m.position.x, m.cut_sign > 0 ? s.top : s.bottom};
}

}  // namespace semitoric
