#pragma once

// Random polygon generators and independent reference computations shared by
// the test suites.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "semitoric/semitoric.hpp"

namespace semitoric::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline GlobalTElement random_T(Rng& rng) {
  std::uniform_int_distribution<int> j(-3, 3);
  std::uniform_int_distribution<int> t(-6, 6);
  std::uniform_int_distribution<int> d(1, 4);
  return {Integer(j(rng)), Rational(t(rng), d(rng))};
}

inline SemitoricPolygon random_rectangle(Rng& rng) {
  const Rational x0 = Rational(std::uniform_int_distribution<int>(-3, 3)(rng), 2);
  const Rational y0 = Rational(std::uniform_int_distribution<int>(-3, 3)(rng), 3);
  const Rational w = random_rational(rng, 6, 3);
  const Rational h = random_rational(rng, 6, 3);
  return SemitoricPolygon({{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}}, {});
}

/// Mark-free Delzant polygons of the form (0,0),(a,0),(a,b+k a)... i.e. a
/// Hirzebruch trapezoid with top slope k.
inline SemitoricPolygon random_hirzebruch(Rng& rng) {
  const Rational a = random_rational(rng, 4, 2);
  const Rational b = random_rational(rng, 4, 2);
  const int k = std::uniform_int_distribution<int>(0, 2)(rng);
  return SemitoricPolygon({{0, 0}, {a, 0}, {a, b}, {0, b + Rational(k) * a}}, {});
}

/// Tries a corner chop at a random Delzant vertex with a random admissible
/// size. Returns nothing if no attempt succeeded.
inline std::optional<SemitoricPolygon> random_chop(Rng& rng, const SemitoricPolygon& p, int attempts = 8) {
  const auto classes = classify_all(p);
  std::vector<Point> candidates;
  for (const auto& vc : classes)
    if (vc.kind == VertexKind::Delzant) candidates.push_back(vc.vertex);
  if (candidates.empty()) return std::nullopt;
  for (int a = 0; a < attempts; ++a) {
    const Point v = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    const Rational delta(std::uniform_int_distribution<int>(1, 3)(rng), std::uniform_int_distribution<int>(4, 12)(rng));
    try {
      return corner_chop(p, v, delta);
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

inline SemitoricPolygon random_toric(Rng& rng) {
  SemitoricPolygon p = std::uniform_int_distribution<int>(0, 1)(rng) ? random_rectangle(rng) : random_hirzebruch(rng);
  const int chops = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int c = 0; c < chops; ++c)
    if (auto q = random_chop(rng, p)) p = *q;
  return p;
}

/// Up to five operations drawn from cut switches, T-images and corner chops.
inline SemitoricPolygon fuzz_derivative(Rng& rng, SemitoricPolygon p) {
  const int steps = std::uniform_int_distribution<int>(1, 5)(rng);
  for (int s = 0; s < steps; ++s) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        if (!p.marks().empty())
          p = switch_cut(p, std::uniform_int_distribution<std::size_t>(0, p.marks().size() - 1)(rng));
        break;
      case 1:
        p = apply_global_T(p, random_T(rng));
        break;
      default:
        if (auto q = random_chop(rng, p)) p = *q;
        break;
    }
  }
  return p;
}

/// Slice by intersecting the vertical line with every edge.
inline Slice slice_by_edges(const SemitoricPolygon& p, const Rational& x) {
  std::vector<Rational> ys;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p.vertex(i);
    const Point& b = p.next(i);
    if (a.x == b.x) {
      if (a.x == x) {
        ys.push_back(a.y);
        ys.push_back(b.y);
      }
      continue;
    }
    const Rational lo = std::min(a.x, b.x);
    const Rational hi = std::max(a.x, b.x);
    if (x < lo || x > hi) continue;
    ys.push_back(a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x));
  }
  return {*std::min_element(ys.begin(), ys.end()), *std::max_element(ys.begin(), ys.end())};
}

inline Rational length_by_edges(const SemitoricPolygon& p, const Rational& x) {
  const Slice s = slice_by_edges(p, x);
  return s.top - s.bottom;
}

/// The graph of a mark-free Delzant polygon read straight off its edges:
/// corners off vertical edges are fixed points, vertical edges are fixed
/// spheres, edges with |first component| >= 2 are Z_k-spheres.
inline KarshonGraph toric_table_graph(const SemitoricPolygon& p) {
  KarshonGraph g;
  std::vector<std::optional<std::size_t>> id(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& v = p.vertex(i);
    if (p.prev(i).x == v.x || p.next(i).x == v.x) continue;
    id[i] = g.vertices.size();
    g.vertices.push_back({GraphVertexKind::Isolated, v.x, 0, 0, Provenance::EllipticElliptic});
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p.vertex(i);
    const Point& b = p.next(i);
    if (a.x == b.x) {
      g.vertices.push_back({GraphVertexKind::Fat, a.x, 0, abs(b.y - a.y), Provenance::FixedSurface});
      continue;
    }
    const Rational dx = abs(b.x - a.x);
    const Rational dy = abs(b.y - a.y);
    // first component of the primitive tangent
    const Integer l = boost::multiprecision::lcm(denominator_of(dx), denominator_of(dy));
    const Integer ix = numerator_of(dx) * (l / denominator_of(dx));
    const Integer iy = numerator_of(dy) * (l / denominator_of(dy));
    const Integer k = ix / boost::multiprecision::gcd(ix, iy);
    if (k < 2) continue;
    const std::size_t from = a.x < b.x ? i : (i + 1) % p.size();
    const std::size_t to = a.x < b.x ? (i + 1) % p.size() : i;
    g.edges.push_back({*id[from], *id[to], static_cast<int>(k)});
  }
  return g;
}

/// The six level configurations a non-adaptable system may show.
inline bool is_listed_bad_level(const OrbitCounts& c) {
  return (c.E == 0 && c.FF >= 3 && c.S == 0) || (c.E == 1 && c.FF >= 2 && c.S == 0) ||
         (c.E == 2 && c.FF >= 1 && c.S == 0) || (c.E == 0 && c.FF >= 1 && c.S == 2) ||
         (c.E == 0 && c.FF >= 2 && c.S == 1) || (c.E == 1 && c.FF >= 1 && c.S == 1);
}

inline std::vector<Rational> interior_levels(const SemitoricPolygon& p) {
  std::set<Rational> xs;
  for (const auto& v : p.vertices()) xs.insert(v.x);
  for (const auto& m : p.marks()) xs.insert(m.position.x);
  xs.erase(p.j_min());
  xs.erase(p.j_max());
  return {xs.begin(), xs.end()};
}

}  // namespace semitoric::testing
