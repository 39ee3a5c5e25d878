#pragma once

// Lattice tests at the vertices of a presentation: Delzant / hidden Delzant /
// fake classification, smoothness, isotropy weights and Z_k-chains.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"
#include "semitoric/polygon.hpp"

namespace semitoric {

enum class VertexKind { Delzant, HiddenDelzant, Fake };

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Delzant: return "delzant";
    case VertexKind::HiddenDelzant: return "hidden-delzant";
    case VertexKind::Fake: return "fake";
  }
  return "?";
}

enum class BoundarySide { Bottom, Top };

inline const char* to_string(BoundarySide s) { return s == BoundarySide::Bottom ? "bottom" : "top"; }

struct VertexClassification {
  Point vertex;
  VertexKind kind = VertexKind::Delzant;
  int degree = 0;  // n_v; 0 for Delzant
  int sign = 0;    // eps_v; 0 when degree is 0
  LatticeVector u;  // left primitive (vertical edges keep their (0, +-1) direction)
  LatticeVector w;  // right primitive
  bool extreme = false;           // x is J_min or J_max
  bool on_vertical_edge = false;  // endpoint of a vertical edge
};

/// Where a vertex sits on the boundary and its two primitive edge tangents.
struct VertexFrame {
  std::size_t index = 0;
  LatticeVector u;
  LatticeVector w;
  bool extreme = false;
  bool on_vertical_edge = false;
  std::optional<BoundarySide> side;  // empty at the extremes
};

namespace detail {

inline LatticeVector edge_tangent(const Point& from, const Point& to) {
  if (from.x == to.x) return primitive_direction(from, to);
  return rightward_primitive(from, to);
}

inline std::optional<std::size_t> position_in(const std::vector<std::size_t>& path, std::size_t idx) {
  auto it = std::find(path.begin(), path.end(), idx);
  if (it == path.end()) return std::nullopt;
  return static_cast<std::size_t>(it - path.begin());
}

}  // namespace detail

inline VertexFrame vertex_frame(const SemitoricPolygon& p, const BoundaryChains& c, std::size_t idx) {
  VertexFrame f;
  f.index = idx;
  const Point& v = p.vertex(idx);
  const Point& prev = p.prev(idx);
  const Point& next = p.next(idx);
  f.on_vertical_edge = prev.x == v.x || next.x == v.x;
  f.extreme = v.x == p.j_min() || v.x == p.j_max();
  if (f.extreme) {
    f.u = detail::edge_tangent(v, prev);
    f.w = detail::edge_tangent(v, next);
    return f;
  }
  const auto on_bottom = detail::position_in(c.bottom, idx);
  const auto& path = on_bottom ? c.bottom : c.top;
  const std::size_t k = on_bottom ? *on_bottom : *detail::position_in(c.top, idx);
  f.side = on_bottom ? BoundarySide::Bottom : BoundarySide::Top;
  f.u = rightward_primitive(p.vertex(path[k - 1]), v);
  f.w = rightward_primitive(v, p.vertex(path[k + 1]));
  return f;
}

namespace detail {

struct CutLoad {
  int degree = 0;
  int sign = 0;
};

inline CutLoad cuts_into(const SemitoricPolygon& p, const BoundaryChains& c, const Point& v) {
  CutLoad load;
  for (const auto& m : p.marks()) {
    if (m.position.x != v.x) continue;
    if (cut_endpoint(p, c, m) != v) continue;
    if (load.degree > 0 && load.sign != m.cut_sign)
      throw ValidationError("cuts with opposite signs end at vertex " + to_string(v));
    load.degree += m.multiplicity;
    load.sign = m.cut_sign;
  }
  return load;
}

}  // namespace detail

inline VertexClassification classify_vertex(const SemitoricPolygon& p, const BoundaryChains& c,
                                            std::size_t idx) {
  const VertexFrame f = vertex_frame(p, c, idx);
  const auto load = detail::cuts_into(p, c, p.vertex(idx));

  VertexClassification r;
  r.vertex = p.vertex(idx);
  r.u = f.u;
  r.w = f.w;
  r.extreme = f.extreme;
  r.on_vertical_edge = f.on_vertical_edge;
  r.degree = load.degree;
  r.sign = load.sign;

  const Integer plain = det2(f.u, f.w);
  if (load.degree == 0) {
    if (abs(plain) != 1)
      throw ValidationError("invalid polygon at " + to_string(r.vertex) + ": no cut ends here but |det(u,w)| = " +
                            Integer(abs(plain)).str());
    r.kind = VertexKind::Delzant;
    return r;
  }
  const Integer sheared = det2(f.u, shear_vector(f.w, Integer(load.sign * load.degree)));
  if (abs(sheared) == 1) {
    r.kind = VertexKind::HiddenDelzant;
  } else if (sheared == 0) {
    r.kind = VertexKind::Fake;
  } else {
    throw ValidationError("invalid polygon at " + to_string(r.vertex) + ": det(u, A_v w) = " + sheared.str() +
                          " with degree " + std::to_string(load.degree));
  }
  return r;
}

inline std::size_t require_vertex(const SemitoricPolygon& p, const Point& v) {
  const auto idx = p.index_of(v);
  if (!idx) throw DomainError(to_string(v) + " is not a vertex of the polygon");
  return *idx;
}

inline VertexClassification classify_vertex(const SemitoricPolygon& p, const Point& v) {
  return classify_vertex(p, boundary_chains(p), require_vertex(p, v));
}

/// Classification of every vertex, in vertex order. Throws on the first failure.
inline std::vector<VertexClassification> classify_all(const SemitoricPolygon& p, const BoundaryChains& c) {
  std::vector<VertexClassification> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(classify_vertex(p, c, i));
  return out;
}

inline std::vector<VertexClassification> classify_all(const SemitoricPolygon& p) {
  return classify_all(p, boundary_chains(p));
}

/// |det(u, w)| = 1, cross-checked against the vertex kind: smooth iff Delzant,
/// or fake of degree 1 with both tangents of first component 1.
inline bool is_smooth_vertex(const VertexClassification& vc) {
  const bool by_det = abs(det2(vc.u, vc.w)) == 1;
  const bool by_kind =
      vc.kind == VertexKind::Delzant ||
      (vc.kind == VertexKind::Fake && vc.degree == 1 && vc.u.a == 1 && vc.w.a == 1);
  if (by_det != by_kind)
    throw InvariantViolation("smoothness characterizations disagree at " + to_string(vc.vertex));
  return by_det;
}

inline bool is_smooth_vertex(const SemitoricPolygon& p, const Point& v) {
  return is_smooth_vertex(classify_vertex(p, v));
}

inline bool is_delzant_polygon(const SemitoricPolygon& p) {
  const auto all = classify_all(p);
  return std::all_of(all.begin(), all.end(), [](const auto& vc) { return is_smooth_vertex(vc); });
}

/// Unordered pair, returned in ascending order.
using WeightPair = std::pair<Integer, Integer>;

inline WeightPair make_weights(Integer a, Integer b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

/// Isotropy weights of the circle action at an elliptic-elliptic vertex: the
/// first components of the two outgoing primitive tangents.
inline WeightPair isotropy_weights(const SemitoricPolygon& p, const BoundaryChains& c, std::size_t idx) {
  const auto vc = classify_vertex(p, c, idx);
  if (vc.kind == VertexKind::Fake)
    throw DomainError(to_string(vc.vertex) + " is a fake vertex; it is not a fixed point");
  if (vc.on_vertical_edge)
    throw DomainError(to_string(vc.vertex) + " lies on a vertical edge; it belongs to a fixed surface");
  const Point& v = vc.vertex;
  if (v.x == p.j_min()) return make_weights(vc.u.a, vc.w.a);
  if (v.x == p.j_max()) return make_weights(-vc.u.a, -vc.w.a);
  return make_weights(vc.w.a, -vc.u.a);
}

inline WeightPair isotropy_weights(const SemitoricPolygon& p, const Point& v) {
  return isotropy_weights(p, boundary_chains(p), require_vertex(p, v));
}

/// Isotropy weights at every focus-focus fixed point.
inline WeightPair focus_focus_weights() { return {Integer(-1), Integer(1)}; }

struct ZkChain {
  int k = 0;
  BoundarySide side = BoundarySide::Bottom;
  std::size_t start_index = 0;
  std::size_t end_index = 0;
  Point start_vertex;
  Point end_vertex;
  std::vector<std::pair<Point, Point>> edges;  // left to right
};

/// Maximal runs of boundary edges whose primitive first component is k >= 2,
/// joined only through fake vertices.
inline std::vector<ZkChain> zk_chains(const SemitoricPolygon& p, const BoundaryChains& c,
                                      const std::vector<VertexClassification>& classes) {
  for (const auto& vc : classes) {
    if (vc.kind == VertexKind::Fake && vc.u.a != vc.w.a)
      throw InvariantViolation("fake vertex " + to_string(vc.vertex) + " with u1 != w1");
  }
  std::vector<ZkChain> out;
  for (const auto side : {BoundarySide::Bottom, BoundarySide::Top}) {
    const auto& path = side == BoundarySide::Bottom ? c.bottom : c.top;
    std::optional<ZkChain> open;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
      const Point& a = p.vertex(path[t]);
      const Point& b = p.vertex(path[t + 1]);
      const Integer k = rightward_primitive(a, b).a;
      if (k >= 2) {
        if (!open) {
          open = ZkChain{};
          open->k = static_cast<int>(k);
          open->side = side;
          open->start_index = path[t];
          open->start_vertex = a;
        } else if (open->k != k) {
          throw InvariantViolation("fake vertex " + to_string(a) + " joins edges with different first components");
        }
        open->edges.emplace_back(a, b);
        const auto& at_b = classes[path[t + 1]];
        const bool last = t + 2 == path.size();
        if (last || at_b.kind != VertexKind::Fake) {
          open->end_index = path[t + 1];
          open->end_vertex = b;
          out.push_back(std::move(*open));
          open.reset();
        }
      } else if (open) {
        throw InvariantViolation("Z_k chain ends at fake vertex " + to_string(a));
      }
    }
  }
  for (const auto& ch : out) {
    if (classes[ch.start_index].kind == VertexKind::Fake || classes[ch.end_index].kind == VertexKind::Fake)
      throw InvariantViolation("Z_k chain pole at a fake vertex");
  }
  return out;
}

inline std::vector<ZkChain> zk_chains(const SemitoricPolygon& p) {
  const auto c = boundary_chains(p);
  return zk_chains(p, c, classify_all(p, c));
}

}  // namespace semitoric
