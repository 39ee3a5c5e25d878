// Acceptance checks A1-A9. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "semitoric/semitoric.hpp"
#include "support.hpp"

using namespace semitoric;
using namespace semitoric::testing;

namespace {

struct Check {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why = what;
    ok = ok && cond;
  }
};

SemitoricPolygon named(const char* n) { return corpus_entry(n).polygon; }

std::vector<SemitoricPolygon> fuzz_set(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  const auto seeds = corpus();
  std::vector<SemitoricPolygon> out;
  for (std::size_t i = 0; out.size() < count; ++i) out.push_back(fuzz_derivative(rng, seeds[i % seeds.size()].polygon));
  return out;
}

Check a1() {
  Check c;
  Rng rng(1001);
  for (const auto& e : corpus()) {
    const std::string ref = canonical_graph(build_graph(e.polygon));
    const auto set = enumerate_presentations(e.polygon);
    c.require(set.members.size() <= 8, e.name + ": more than 8 presentations");
    for (const auto& [s, q] : set.members)
      c.require(canonical_graph(build_graph(q)) == ref, e.name + ": presentation graph differs");
    for (int i = 0; i < 10; ++i)
      c.require(canonical_graph(build_graph(apply_global_T(e.polygon, random_T(rng)))) == ref,
                e.name + ": T-image graph differs");
  }
  return c;
}

Check a2() {
  Check c;
  const auto g = canonical_form(build_graph(named("FF1")));
  c.require(g.vertices.size() == 3, "vertex count");
  for (std::size_t i = 0; i < g.vertices.size() && i < 3; ++i) {
    c.require(g.vertices[i].kind == GraphVertexKind::Isolated, "isolated vertices");
    c.require(g.vertices[i].label == Rational(static_cast<int>(i)), "labels 0, 1, 2");
  }
  c.require(g.edges.size() == 1 && g.edges[0] == GraphEdge{0, 2, 2}, "single edge 0->2 of weight 2");

  const auto top = zk_chains(named("FF1"));
  c.require(top.size() == 1 && top[0].k == 2 && top[0].side == BoundarySide::Top &&
                top[0].start_vertex == Point{0, 0} && top[0].end_vertex == Point{2, 1} && top[0].edges.size() == 1,
            "FF1 top edge is one Z_2 chain");
  const auto other = switch_cut(named("FF1"), 0);
  const auto split = zk_chains(other);
  c.require(split.size() == 1 && split[0].k == 2 && split[0].edges.size() == 2, "switched chain has two edges");
  if (split.size() == 1 && split[0].edges.size() == 2) {
    const Point mid = split[0].edges[0].second;
    c.require(classify_vertex(other, mid).kind == VertexKind::Fake, "chain bends at a fake vertex");
  }
  return c;
}

Check a3(std::size_t* fuzz_count) {
  Check c;
  std::vector<SemitoricPolygon> all;
  for (const auto& e : corpus()) all.push_back(e.polygon);
  const auto fz = fuzz_set(3003, 240);
  all.insert(all.end(), fz.begin(), fz.end());
  *fuzz_count = fz.size();
  for (const auto& p : all) {
    bool by_levels = true;
    for (const auto& x : interior_levels(p)) by_levels = by_levels && orbit_counts(p, x).total() <= 2;
    bool by_presentations = false;
    for (const auto& rp : refined_presentations(p)) by_presentations = by_presentations || is_delzant_polygon(rp.polygon);
    c.require(by_levels == by_presentations, "criteria disagree on " + serialize_polygon(p));
    try {
      const auto v = adaptability(p);
      c.require(v.criteria_agree && v.adaptable == by_levels, "verdict mismatch on " + serialize_polygon(p));
    } catch (const InvariantViolation& e) {
      c.require(false, e.what());
    }
  }
  return c;
}

Check a4() {
  Check c;
  for (const auto& e : corpus())
    for (const auto& [s, q] : enumerate_presentations(e.polygon).members)
      c.require(dh_jump_report(q).consistent(), e.name + ": inconsistent jump");
  auto jump_at = [](const char* n, const Rational& x) -> std::optional<JumpEntry> {
    for (const auto& e : dh_jump_report(named(n)).entries)
      if (e.x == x) return e;
    return std::nullopt;
  };
  const auto ff1 = jump_at("FF1", 1);
  const auto hd = jump_at("HD1DOWN", 1);
  const auto na = jump_at("NONADAPT3", 1);
  c.require(ff1 && ff1->observed == -1 && ff1->predicted == -1, "FF1 jump -1");
  c.require(hd && hd->observed == -2 && hd->predicted == -2, "HD1DOWN jump -2");
  c.require(na && na->observed == -3 && na->predicted == -3, "NONADAPT3 jump -3");
  return c;
}

Check a5() {
  Check c;
  Rng rng(5005);
  int chopped = 0;
  for (int i = 0; i < 50; ++i) {
    const auto p = random_toric(rng);
    chopped += p.size() > 4;
    c.require(p.marks().empty() && is_delzant_polygon(p), "generator produced a non-toric polygon");
    c.require(canonical_graph(build_graph(p)) == canonical_graph(toric_table_graph(p)),
              "graph differs from table on " + serialize_polygon(p));
  }
  c.require(chopped > 0, "no chopped products generated");
  return c;
}

Check a6() {
  Check c;
  const auto p = named("NONADAPT3");
  const auto v = adaptability(p);
  c.require(!v.adaptable, "flagged non-adaptable");
  c.require(self_intersection(p, Side::Left) == 0, "left self-intersection 0");
  c.require(orbit_counts(p, 1) == OrbitCounts{0, 3, 0}, "level x=1 has E=0, FF=3, S=0");
  for (const auto& rp : refined_presentations(p)) c.require(!is_delzant_polygon(rp.polygon), "a presentation is Delzant");
  const auto vc = classify_vertex(p, {1, 0});
  c.require(vc.kind == VertexKind::Fake && vc.degree == 3 && abs(det2(vc.u, vc.w)) == 3, "degree-3 fake vertex");
  c.require(delzant_presentations(p).empty(), "no Delzant presentations");
  return c;
}

Check a7() {
  Check c;
  for (const auto& e : corpus()) {
    const auto f = dh_function(e.polygon);
    for (std::size_t i = 0; i < e.polygon.marks().size(); ++i) {
      const auto once = switch_cut(e.polygon, i);
      c.require(switch_cut(once, i) == e.polygon, e.name + ": switch is not an involution");
      c.require(dh_function(once) == f, e.name + ": switch changed the DH function");
    }
    for (const auto& [s, q] : enumerate_presentations(e.polygon).members)
      c.require(dh_function(q) == f, e.name + ": presentation changed the DH function");
  }
  return c;
}

Check a8() {
  Check c;
  std::vector<SemitoricPolygon> all;
  for (const auto& e : corpus()) all.push_back(e.polygon);
  const auto fz = fuzz_set(8008, 200);
  all.insert(all.end(), fz.begin(), fz.end());
  for (const auto& p : all) {
    const auto g = build_graph(p);
    c.require(kirwan_check(g, focus_focus_count(g)) && focus_focus_count(g) == p.total_multiplicity(),
              "Kirwan bound fails on " + serialize_polygon(p));
  }
  const auto g = build_graph(named("FF1"));
  c.require(named("FF1").total_multiplicity() == 1 && betti_b2(g) == 1, "FF1 equality 1 = 1");
  return c;
}

Check a9() {
  Check c;
  c.require(self_intersection(named("CP2STD"), Side::Left) == 1, "CP2STD left = +1");
  c.require(self_intersection(named("SQUARE"), Side::Left) == 0, "SQUARE left = 0");
  c.require(self_intersection(named("SQUARE"), Side::Right) == 0, "SQUARE right = 0");
  std::vector<SemitoricPolygon> all;
  for (const auto& e : corpus()) all.push_back(e.polygon);
  const auto fz = fuzz_set(9009, 100);
  all.insert(all.end(), fz.begin(), fz.end());
  for (const auto& p : all) {
    const auto ch = boundary_chains(p);
    if (ch.left_vertical) {
      const auto w = primitive_direction(p.vertex(ch.left_vertical->lower), p.vertex(ch.bottom[1]));
      const auto w2 = primitive_direction(p.vertex(ch.left_vertical->upper), p.vertex(ch.top[1]));
      c.require(abs(self_intersection(p, Side::Left)) == abs(det2(w, w2)), "left |I| != |det|");
    }
    if (ch.right_vertical) {
      const auto w = primitive_direction(p.vertex(ch.right_vertical->lower), p.vertex(ch.bottom[ch.bottom.size() - 2]));
      const auto w2 = primitive_direction(p.vertex(ch.right_vertical->upper), p.vertex(ch.top[ch.top.size() - 2]));
      c.require(abs(self_intersection(p, Side::Right)) == abs(det2(w, w2)), "right |I| != |det|");
    }
  }
  return c;
}

}  // namespace

int main() {
  std::size_t fuzz_count = 0;
  const std::vector<std::pair<std::string, std::function<Check()>>> checks = {
      {"A1 graph invariance across presentations and T-images", a1},
      {"A2 weighted CP2 graph and Z_2 chain", a2},
      {"A3 orbit-count adaptability equals Delzant presentation", [&] { return a3(&fuzz_count); }},
      {"A4 DH jump identity", a4},
      {"A5 toric table oracle", a5},
      {"A6 non-adaptable witness", a6},
      {"A7 cut switch involution and DH invariance", a7},
      {"A8 Kirwan bound", a8},
      {"A9 self-intersection calibration", a9},
  };
  int failed = 0;
  for (const auto& [name, fn] : checks) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.0f ms)%s%s\n", c.ok ? "PASS" : "FAIL", name.c_str(), ms, c.ok ? "" : ": ",
                c.why.c_str());
    failed += !c.ok;
  }
  std::printf("A3 fuzz polygons: %zu\n", fuzz_count);
  return failed == 0 ? 0 : 1;
}
