#pragma once

// Bundled example presentations with their expected invariants.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitoric/errors.hpp"
#include "semitoric/io.hpp"
#include "semitoric/polygon.hpp"

namespace semitoric {

struct CorpusExpectation {
  std::string graph;  // canonical_graph
  int b2 = 0;
  bool delzant = false;
  bool adaptable = false;
};

struct CorpusEntry {
  std::string name;
  std::string text;  // polygon file contents
  SemitoricPolygon polygon;
  std::optional<CorpusExpectation> expected;
};

namespace detail {

struct RawEntry {
  const char* name;
  const char* text;
  const char* graph;
  int b2;
  bool delzant;
  bool adaptable;
};

// clang-format off
inline constexpr RawEntry kCorpus[] = {
    {"SQUARE",
     R"({"vertices":[["0","0"],["1","0"],["1","1"],["0","1"]],"marked_points":[]})",
     R"({"vertices":[{"id":0,"kind":"fat","label":"0","genus":0,"area":"1"},{"id":1,"kind":"fat","label":"1","genus":0,"area":"1"}],"edges":[]})",
     2, true, true},
    {"CP2STD",
     R"({"vertices":[["0","0"],["1","0"],["0","1"]],"marked_points":[]})",
     R"({"vertices":[{"id":0,"kind":"fat","label":"0","genus":0,"area":"1"},{"id":1,"kind":"isolated","label":"1"}],"edges":[]})",
     1, true, true},
    {"TRI121",
     R"({"vertices":[["0","0"],["2","1"],["1","1"]],"marked_points":[]})",
     R"({"vertices":[{"id":0,"kind":"isolated","label":"0"},{"id":1,"kind":"isolated","label":"1"},{"id":2,"kind":"isolated","label":"2"}],"edges":[{"from":0,"to":2,"weight":2}]})",
     1, true, true},
    {"FF1",
     R"({"vertices":[["0","0"],["1","0"],["2","1"]],"marked_points":[{"x":"1","y":"1/4","multiplicity":1,"cut":-1}]})",
     R"({"vertices":[{"id":0,"kind":"isolated","label":"0"},{"id":1,"kind":"isolated","label":"1"},{"id":2,"kind":"isolated","label":"2"}],"edges":[{"from":0,"to":2,"weight":2}]})",
     1, true, true},
    {"FF1UP",
     R"({"vertices":[["0","0"],["2","0"],["1","1/2"]],"marked_points":[{"x":"1","y":"1/4","multiplicity":1,"cut":1}]})",
     R"({"vertices":[{"id":0,"kind":"isolated","label":"0"},{"id":1,"kind":"isolated","label":"1"},{"id":2,"kind":"isolated","label":"2"}],"edges":[{"from":0,"to":2,"weight":2}]})",
     1, false, true},
    {"HD1",
     R"({"vertices":[["0","0"],["2","0"],["1","1"]],"marked_points":[{"x":"1","y":"1/2","multiplicity":1,"cut":1}]})",
     R"({"vertices":[{"id":0,"kind":"isolated","label":"0"},{"id":1,"kind":"isolated","label":"1"},{"id":2,"kind":"isolated","label":"1"},{"id":3,"kind":"isolated","label":"2"}],"edges":[]})",
     2, false, true},
    {"HD1DOWN",
     R"({"vertices":[["0","0"],["1","0"],["2","1"],["1","1"]],"marked_points":[{"x":"1","y":"1/2","multiplicity":1,"cut":-1}]})",
     R"({"vertices":[{"id":0,"kind":"isolated","label":"0"},{"id":1,"kind":"isolated","label":"1"},{"id":2,"kind":"isolated","label":"1"},{"id":3,"kind":"isolated","label":"2"}],"edges":[]})",
     2, true, true},
    {"NONADAPT3",
     R"({"vertices":[["0","0"],["1","0"],["2","3"],["2","4"],["0","4"]],"marked_points":[{"x":"1","y":"2","multiplicity":3,"cut":-1}]})",
     R"({"vertices":[{"id":0,"kind":"fat","label":"0","genus":0,"area":"4"},{"id":1,"kind":"isolated","label":"1"},{"id":2,"kind":"isolated","label":"1"},{"id":3,"kind":"isolated","label":"1"},{"id":4,"kind":"fat","label":"2","genus":0,"area":"1"}],"edges":[]})",
     5, false, false},
    {"TWOFF",
     R"({"vertices":[["0","0"],["1","0"],["2","1"],["3","3"]],"marked_points":[{"x":"1","y":"1/2","multiplicity":1,"cut":-1},{"x":"2","y":"3/2","multiplicity":1,"cut":-1}]})",
     R"({"vertices":[{"id":0,"kind":"isolated","label":"0"},{"id":1,"kind":"isolated","label":"1"},{"id":2,"kind":"isolated","label":"2"},{"id":3,"kind":"isolated","label":"3"}],"edges":[]})",
     2, true, true},
    {"SPIN2",
     R"({"vertices":[["0","0"],["1","0"],["2","1"],["2","2"],["1","3"],["0","3"]],"marked_points":[{"x":"1","y":"1","multiplicity":1,"cut":-1},{"x":"1","y":"2","multiplicity":1,"cut":1}]})",
     R"({"vertices":[{"id":0,"kind":"fat","label":"0","genus":0,"area":"3"},{"id":1,"kind":"isolated","label":"1"},{"id":2,"kind":"isolated","label":"1"},{"id":3,"kind":"fat","label":"2","genus":0,"area":"1"}],"edges":[]})",
     4, true, true},
};
// clang-format on

}  // namespace detail

inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& raw : detail::kCorpus)
    out.push_back({raw.name, raw.text, parse_polygon(raw.text),
                   CorpusExpectation{raw.graph, raw.b2, raw.delzant, raw.adaptable}});
  return out;
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& raw : detail::kCorpus) names.emplace_back(raw.name);
  return names;
}

inline CorpusEntry corpus_entry(std::string_view name) {
  for (const auto& raw : detail::kCorpus)
    if (name == raw.name)
      return {raw.name, raw.text, parse_polygon(raw.text),
              CorpusExpectation{raw.graph, raw.b2, raw.delzant, raw.adaptable}};
  throw DomainError("no corpus entry named \"" + std::string(name) + "\"");
}

}  // namespace semitoric
