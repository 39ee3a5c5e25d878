#pragma once

// The labeled directed graph of the underlying Hamiltonian circle action, read
// off a presentation, together with its canonical form and Betti bound.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/validate.hpp"
#include "semitoric/vertex_analysis.hpp"

namespace semitoric {

enum class GraphVertexKind { Isolated, Fat };
enum class Provenance { FocusFocus, EllipticElliptic, FixedSurface };

inline const char* to_string(GraphVertexKind k) { return k == GraphVertexKind::Isolated ? "isolated" : "fat"; }

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::FocusFocus: return "focus-focus";
    case Provenance::EllipticElliptic: return "elliptic-elliptic";
    case Provenance::FixedSurface: return "fixed-surface";
  }
  return "?";
}

struct GraphVertex {
  GraphVertexKind kind = GraphVertexKind::Isolated;
  Rational label;      // value of J
  int genus = 0;       // fat vertices only
  Rational area;       // fat vertices only: normalized symplectic area
  Provenance provenance = Provenance::EllipticElliptic;  // diagnostics; ignored by equality
};

struct GraphEdge {
  std::size_t from = 0;  // south pole
  std::size_t to = 0;    // north pole
  int weight = 0;

  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct KarshonGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
};

inline KarshonGraph build_graph(const SemitoricPolygon& p) {
  require_valid(p);
  const auto chains = boundary_chains(p);
  const auto classes = classify_all(p, chains);

  KarshonGraph g;
  std::map<std::size_t, std::size_t> id_of_vertex;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& vc = classes[i];
    if (vc.kind == VertexKind::Fake || vc.on_vertical_edge) continue;
    id_of_vertex[i] = g.vertices.size();
    g.vertices.push_back({GraphVertexKind::Isolated, vc.vertex.x, 0, 0, Provenance::EllipticElliptic});
  }
  for (const auto& m : p.marks())
    for (int k = 0; k < m.multiplicity; ++k)
      g.vertices.push_back({GraphVertexKind::Isolated, m.position.x, 0, 0, Provenance::FocusFocus});
  for (const auto& e : {chains.left_vertical, chains.right_vertical}) {
    if (!e) continue;
    const Point& lo = p.vertex(e->lower);
    const Point& hi = p.vertex(e->upper);
    g.vertices.push_back({GraphVertexKind::Fat, lo.x, 0, hi.y - lo.y, Provenance::FixedSurface});
  }
  for (const auto& ch : zk_chains(p, chains, classes)) {
    g.edges.push_back({id_of_vertex.at(ch.start_index), id_of_vertex.at(ch.end_index), ch.k});
  }
  return g;
}

/// Rank of H^2: fixed points of Morse index 2 (interior isolated vertices)
/// plus one class per fixed sphere.
inline int betti_b2(const KarshonGraph& g) {
  if (g.vertices.empty()) return 0;
  auto [lo, hi] = std::minmax_element(g.vertices.begin(), g.vertices.end(),
                                      [](const auto& a, const auto& b) { return a.label < b.label; });
  const Rational jmin = lo->label;
  const Rational jmax = hi->label;
  int b2 = 0;
  for (const auto& v : g.vertices) {
    if (v.kind == GraphVertexKind::Fat)
      ++b2;
    else if (jmin < v.label && v.label < jmax)
      ++b2;
  }
  return b2;
}

inline bool kirwan_check(const KarshonGraph& g, int focus_focus_count) { return focus_focus_count <= betti_b2(g); }

inline int focus_focus_count(const KarshonGraph& g) {
  return static_cast<int>(std::count_if(g.vertices.begin(), g.vertices.end(),
                                        [](const auto& v) { return v.provenance == Provenance::FocusFocus; }));
}

inline nlohmann::ordered_json to_json(const KarshonGraph& g, bool with_provenance = false) {
  using nlohmann::ordered_json;
  ordered_json vs = ordered_json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    ordered_json j;
    j["id"] = i;
    j["kind"] = to_string(v.kind);
    j["label"] = to_string(v.label);
    if (v.kind == GraphVertexKind::Fat) {
      j["genus"] = v.genus;
      j["area"] = to_string(v.area);
    }
    if (with_provenance) j["provenance"] = to_string(v.provenance);
    vs.push_back(std::move(j));
  }
  ordered_json es = ordered_json::array();
  for (const auto& e : g.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
  ordered_json out;
  out["vertices"] = std::move(vs);
  out["edges"] = std::move(es);
  return out;
}

inline constexpr std::size_t kMaxTieBlock = 8;
inline constexpr std::size_t kMaxTiePermutations = 40320;

/// Relabels the graph into its canonical order. Vertices are sorted by
/// (label, kind, area); within a tie, the edge-bearing vertices are permuted to
/// minimize the sorted edge list. Provenance is reset.
inline KarshonGraph canonical_form(const KarshonGraph& g) {
  const auto n = g.vertices.size();
  auto key_less = [&](std::size_t a, std::size_t b) {
    const auto& va = g.vertices[a];
    const auto& vb = g.vertices[b];
    if (va.label != vb.label) return va.label < vb.label;
    if (va.kind != vb.kind) return va.kind < vb.kind;
    return va.area < vb.area;
  };
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), key_less);

  std::vector<int> degree(n, 0);
  for (const auto& e : g.edges) {
    ++degree[e.from];
    ++degree[e.to];
  }

  // Within each tie block, edge-bearing vertices come first; those are the
  // only positions whose assignment changes the serialization.
  struct Block {
    std::size_t offset;
    std::vector<std::size_t> movable;
  };
  std::vector<Block> blocks;
  std::size_t total = 1;
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s + 1;
    while (e < n && !key_less(order[s], order[e])) ++e;
    std::stable_partition(order.begin() + static_cast<std::ptrdiff_t>(s),
                          order.begin() + static_cast<std::ptrdiff_t>(e),
                          [&](std::size_t v) { return degree[v] > 0; });
    Block b{s, {}};
    for (std::size_t k = s; k < e && degree[order[k]] > 0; ++k) b.movable.push_back(order[k]);
    if (b.movable.size() > kMaxTieBlock)
      throw DomainError("tied block of " + std::to_string(b.movable.size()) + " edge-bearing vertices exceeds " +
                        std::to_string(kMaxTieBlock));
    for (std::size_t f = 2; f <= b.movable.size(); ++f) total *= f;
    if (total > kMaxTiePermutations) throw DomainError("too many tie-breaking permutations");
    if (b.movable.size() > 1) {
      std::sort(b.movable.begin(), b.movable.end());
      blocks.push_back(std::move(b));
    }
    s = e;
  }

  auto edges_for = [&](const std::vector<std::size_t>& ord) {
    std::vector<std::size_t> id(n);
    for (std::size_t k = 0; k < n; ++k) id[ord[k]] = k;
    std::vector<GraphEdge> es;
    for (const auto& e : g.edges) es.push_back({id[e.from], id[e.to], e.weight});
    std::sort(es.begin(), es.end());
    return es;
  };

  std::vector<std::size_t> best_order = order;
  std::vector<GraphEdge> best = edges_for(order);
  while (true) {
    std::size_t b = blocks.size();
    while (b > 0) {
      --b;
      if (std::next_permutation(blocks[b].movable.begin(), blocks[b].movable.end())) {
        ++b;
        break;
      }
      if (b == 0) {
        b = static_cast<std::size_t>(-1);
        break;
      }
    }
    if (blocks.empty() || b == static_cast<std::size_t>(-1)) break;
    for (const auto& blk : blocks)
      std::copy(blk.movable.begin(), blk.movable.end(), order.begin() + static_cast<std::ptrdiff_t>(blk.offset));
    auto es = edges_for(order);
    if (es < best) {
      best = std::move(es);
      best_order = order;
    }
  }

  KarshonGraph out;
  for (std::size_t k = 0; k < n; ++k) {
    GraphVertex v = g.vertices[best_order[k]];
    v.provenance = v.kind == GraphVertexKind::Fat ? Provenance::FixedSurface : Provenance::EllipticElliptic;
    out.vertices.push_back(v);
  }
  out.edges = std::move(best);
  return out;
}

/// Deterministic serialization of the canonical form; equal strings iff the
/// graphs are equal as labeled directed graphs.
inline std::string canonical_graph(const KarshonGraph& g) { return to_json(canonical_form(g)).dump(); }

inline bool graphs_equal(const KarshonGraph& a, const KarshonGraph& b) {
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace semitoric
