#pragma once

// Exact scalars, lattice vectors and the vertical-line-preserving affine maps.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semitoric/errors.hpp"

namespace semitoric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Formats as "p" or "p/q" (lowest terms, positive denominator).
inline std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "p" or "p/q". Decimal points, exponents and whitespace are rejected.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) ||
      (slash != std::string_view::npos && (den[0] == '-' || den[0] == '+')))
    throw ParseError("rationals must be p/q strings, got \"" + std::string(text) + "\"");
  const Integer n{std::string(num[0] == '+' ? num.substr(1) : num)};
  const Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(n, d);
}

/// floor(a / b) for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

/// Cross product of (b - a) and (c - b); positive for a left turn.
inline Rational turn(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

struct LatticeVector {
  Integer a;
  Integer b;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

inline std::string to_string(const LatticeVector& v) {
  return "(" + v.a.str() + "," + v.b.str() + ")";
}

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  return os << to_string(v);
}

/// Divides by the gcd; direction and orientation are kept.
inline LatticeVector primitive(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw DomainError("primitive of the zero vector");
  const Integer g = boost::multiprecision::gcd(abs(a), abs(b));
  return {a / g, b / g};
}

inline LatticeVector primitive(const LatticeVector& v) { return primitive(v.a, v.b); }

/// Primitive lattice vector along the rational direction to - from.
inline LatticeVector primitive_direction(const Point& from, const Point& to) {
  const Rational dx = to.x - from.x;
  const Rational dy = to.y - from.y;
  const Integer l = boost::multiprecision::lcm(denominator_of(dx), denominator_of(dy));
  return primitive(numerator_of(dx) * (l / denominator_of(dx)),
                   numerator_of(dy) * (l / denominator_of(dy)));
}

/// Same as primitive_direction but flipped, if needed, to have a positive first
/// component. Vertical directions are returned as they are.
inline LatticeVector rightward_primitive(const Point& from, const Point& to) {
  LatticeVector v = primitive_direction(from, to);
  if (v.a < 0) v = {-v.a, -v.b};
  return v;
}

inline Integer det2(const LatticeVector& u, const LatticeVector& w) { return u.a * w.b - u.b * w.a; }

/// The lower-triangular shear (1 0; c 1) applied to a lattice vector.
inline LatticeVector shear_vector(const LatticeVector& v, const Integer& coefficient) {
  return {v.a, v.b + coefficient * v.a};
}

/// Identity for x <= pivot_x, y += coefficient * (x - pivot_x) to the right.
struct VerticalShear {
  Rational pivot_x;
  Integer coefficient;

  Point operator()(const Point& p) const {
    if (p.x <= pivot_x) return p;
    return {p.x, p.y + Rational(coefficient) * (p.x - pivot_x)};
  }
};

/// (x, y) -> (x, j x + y + t): the affine maps preserving vertical lines.
struct GlobalTElement {
  Integer j;
  Rational t;

  Point operator()(const Point& p) const { return {p.x, Rational(j) * p.x + p.y + t}; }

  GlobalTElement then(const GlobalTElement& next) const { return {j + next.j, t + next.t}; }
};

inline std::vector<Point> apply_vertical_shear(std::span<const Point> points, const VerticalShear& s) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(s(p));
  return out;
}

inline std::vector<Point> apply_global_T(std::span<const Point> points, const GlobalTElement& g) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(g(p));
  return out;
}

}  // namespace semitoric
