#pragma once

// Polygon files, graph DOT output and JSON renderings of the analysis results.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/geometry.hpp"
#include "semitoric/karshon_graph.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/system_analysis.hpp"
#include "semitoric/validate.hpp"
#include "semitoric/vertex_analysis.hpp"

namespace semitoric {

namespace detail {

using nlohmann::json;

inline Rational rational_field(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": rationals must be p/q strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline int integer_field(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

inline void only_keys(const json& obj, std::initializer_list<std::string_view> keys, const std::string& where) {
  for (const auto& [k, _] : obj.items()) {
    bool known = false;
    for (auto allowed : keys) known = known || k == allowed;
    if (!known) throw ParseError(where + ": unknown field \"" + k + "\"");
  }
}

}  // namespace detail

/// Reads the polygon JSON format without validating it.
inline SemitoricPolygon parse_polygon_unchecked(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  detail::only_keys(doc, {"vertices", "marked_points"}, "top level");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("vertices: expected an array of [x, y] pairs");

  std::vector<Point> vs;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!v.is_array() || v.size() != 2) throw ParseError(where + ": expected [x, y]");
    vs.push_back({detail::rational_field(v[0], where + "[0]"), detail::rational_field(v[1], where + "[1]")});
  }

  std::vector<MarkedPoint> marks;
  if (doc.contains("marked_points")) {
    const auto& ms = doc["marked_points"];
    if (!ms.is_array()) throw ParseError("marked_points: expected an array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto& m = ms[i];
      const std::string where = "marked_points[" + std::to_string(i) + "]";
      if (!m.is_object()) throw ParseError(where + ": expected an object");
      detail::only_keys(m, {"x", "y", "multiplicity", "cut"}, where);
      for (const char* key : {"x", "y", "cut"})
        if (!m.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
      MarkedPoint mp;
      mp.position = {detail::rational_field(m["x"], where + ".x"), detail::rational_field(m["y"], where + ".y")};
      mp.multiplicity = m.contains("multiplicity") ? detail::integer_field(m["multiplicity"], where + ".multiplicity") : 1;
      mp.cut_sign = detail::integer_field(m["cut"], where + ".cut");
      marks.push_back(mp);
    }
  }
  return SemitoricPolygon(std::move(vs), std::move(marks));
}

/// Parses and validates. Throws ParseError on malformed text and
/// ValidationFailure (with the report) on invalid data.
inline SemitoricPolygon parse_polygon(std::string_view text) {
  auto p = parse_polygon_unchecked(text);
  if (p.size() >= 3 && doubled_signed_area(p.vertices()) < 0) {
    ValidationReport r;
    r.add("orientation", "", "vertices are not counter-clockwise");
    throw ValidationFailure(std::move(r));
  }
  require_valid(p);
  return p;
}

inline nlohmann::ordered_json to_json(const SemitoricPolygon& p) {
  using nlohmann::ordered_json;
  ordered_json vs = ordered_json::array();
  for (const auto& v : p.vertices()) vs.push_back({to_string(v.x), to_string(v.y)});
  ordered_json ms = ordered_json::array();
  for (const auto& m : p.marks()) {
    ordered_json j;
    j["x"] = to_string(m.position.x);
    j["y"] = to_string(m.position.y);
    j["multiplicity"] = m.multiplicity;
    j["cut"] = m.cut_sign;
    ms.push_back(std::move(j));
  }
  ordered_json out;
  out["vertices"] = std::move(vs);
  out["marked_points"] = std::move(ms);
  return out;
}

/// Canonical compact bytes; parse_polygon inverts it.
inline std::string serialize_polygon(const SemitoricPolygon& p) { return to_json(p).dump(); }

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string emit_dot(const KarshonGraph& g) {
  std::ostringstream os;
  os << "digraph karshon {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  n" << i << " [shape=";
    if (v.kind == GraphVertexKind::Fat)
      os << "doublecircle, label="
         << detail::dot_quote("J=" + to_string(v.label) + ", g=" + std::to_string(v.genus) +
                              ", area=" + to_string(v.area));
    else
      os << "circle, label=" << detail::dot_quote(to_string(v.label));
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=" << detail::dot_quote(std::to_string(e.weight))
       << "];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::ordered_json to_json(const LatticeVector& v) { return {v.a.str(), v.b.str()}; }

inline nlohmann::ordered_json to_json(const VertexClassification& vc) {
  nlohmann::ordered_json j;
  j["vertex"] = {to_string(vc.vertex.x), to_string(vc.vertex.y)};
  j["kind"] = to_string(vc.kind);
  j["degree"] = vc.degree;
  if (vc.degree > 0) j["sign"] = vc.sign;
  j["u"] = to_json(vc.u);
  j["w"] = to_json(vc.w);
  j["det"] = det2(vc.u, vc.w).str();
  j["smooth"] = is_smooth_vertex(vc);
  return j;
}

inline nlohmann::ordered_json to_json(const ValidationReport& r) {
  nlohmann::ordered_json j;
  j["valid"] = r.valid;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) vs.push_back({{"rule", v.rule}, {"location", v.location}, {"message", v.message}});
  j["violations"] = std::move(vs);
  return j;
}

inline nlohmann::ordered_json to_json(const PiecewiseLinear& f) {
  nlohmann::ordered_json j;
  j["breakpoints"] = nlohmann::ordered_json::array();
  j["values"] = nlohmann::ordered_json::array();
  for (const auto& x : f.breakpoints) j["breakpoints"].push_back(to_string(x));
  for (const auto& y : f.values) j["values"].push_back(to_string(y));
  return j;
}

inline nlohmann::ordered_json to_json(const JumpReport& r) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json j;
    j["x"] = to_string(e.x);
    j["left_slope"] = to_string(e.left_slope);
    j["right_slope"] = to_string(e.right_slope);
    j["observed"] = to_string(e.observed);
    j["predicted"] = to_string(e.predicted);
    j["e_plus"] = to_string(e.e_plus);
    j["e_minus"] = to_string(e.e_minus);
    j["j_x"] = e.j_x;
    j["consistent"] = e.consistent;
    out.push_back(std::move(j));
  }
  return out;
}

inline nlohmann::ordered_json to_json(const OrbitCounts& oc) {
  return {{"E", oc.E}, {"FF", oc.FF}, {"S", oc.S}};
}

inline nlohmann::ordered_json to_json(const AdaptabilityVerdict& v, const SemitoricPolygon& p) {
  nlohmann::ordered_json j;
  j["adaptable"] = v.adaptable;
  j["criteria_agree"] = v.criteria_agree;
  j["violating_levels"] = nlohmann::ordered_json::array();
  for (const auto& [x, oc] : v.violating_levels) {
    auto level = to_json(oc);
    nlohmann::ordered_json entry;
    entry["x"] = to_string(x);
    for (auto& [k, val] : level.items()) entry[k] = val;
    j["violating_levels"].push_back(std::move(entry));
  }
  j["delzant_presentations"] = nlohmann::ordered_json::array();
  for (const auto& up : v.delzant_presentations) j["delzant_presentations"].push_back(cut_pattern(p, up));
  return j;
}

}  // namespace semitoric
