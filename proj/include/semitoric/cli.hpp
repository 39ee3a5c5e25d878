#pragma once

// Command-line front end. run_cli parses argv, runs one subcommand and returns
// the process exit code.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semitoric/corner_chop.hpp"
#include "semitoric/corpus.hpp"
#include "semitoric/cut_calculus.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/io.hpp"
#include "semitoric/karshon_graph.hpp"
#include "semitoric/system_analysis.hpp"
#include "semitoric/validate.hpp"
#include "semitoric/vertex_analysis.hpp"

namespace semitoric {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,
  kExitInvalid = 2,
  kExitInternal = 70,
  kExitUsage = 64,
};

namespace detail {

/// File path, or corpus:NAME for a bundled entry.
inline std::string read_input(const std::string& source) {
  constexpr std::string_view scheme = "corpus:";
  if (source.rfind(scheme, 0) == 0) return corpus_entry(source.substr(scheme.size())).text;
  std::ifstream in(source, std::ios::binary);
  if (!in) throw ParseError("cannot read " + source);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Point parse_point_arg(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("--vertex expects X,Y");
  return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

inline void print_classification_table(std::ostream& out, const std::vector<VertexClassification>& all) {
  out << "vertex\tkind\tdegree\tsign\tu\tw\tdet\tsmooth\n";
  for (const auto& vc : all) {
    out << to_string(vc.vertex) << '\t' << to_string(vc.kind) << '\t' << vc.degree << '\t';
    if (vc.degree > 0)
      out << (vc.sign > 0 ? "+1" : "-1");
    else
      out << '-';
    out << '\t' << to_string(vc.u) << '\t' << to_string(vc.w) << '\t' << det2(vc.u, vc.w) << '\t'
        << (is_smooth_vertex(vc) ? "yes" : "no") << '\n';
  }
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Karshon graphs and invariants of semi-toric polygons", "semitoric"};
  app.require_subcommand(1);

  std::string input;
  std::string format;
  auto add_input = [&](CLI::App* sub) { sub->add_option("file", input, "polygon file or corpus:NAME")->required(); };

  auto* validate_cmd = app.add_subcommand("validate", "check a polygon and list violations");
  add_input(validate_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "per-vertex classification");
  add_input(classify_cmd);
  classify_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* graph_cmd = app.add_subcommand("graph", "the labeled directed graph");
  add_input(graph_cmd);
  graph_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* dh_cmd = app.add_subcommand("dh", "Duistermaat-Heckman density and jump report");
  add_input(dh_cmd);

  auto* adapt_cmd = app.add_subcommand("adaptable", "adaptability verdict with witnesses");
  add_input(adapt_cmd);
  adapt_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::size_t index = 0;
  auto* switch_cmd = app.add_subcommand("switch-cut", "flip the cut of one mark entry");
  add_input(switch_cmd);
  switch_cmd->add_option("--index", index, "mark entry index")->required();

  bool delzant_only = false;
  auto* pres_cmd = app.add_subcommand("presentations", "all cut choices");
  add_input(pres_cmd);
  pres_cmd->add_flag("--delzant-only", delzant_only, "only Delzant presentations, in normal form");

  std::string side;
  auto* si_cmd = app.add_subcommand("self-intersection", "self-intersection of a fixed sphere");
  add_input(si_cmd);
  si_cmd->add_option("--side", side, "left or right")->required()->check(CLI::IsMember({"left", "right"}));

  std::string vertex_arg;
  std::string size_arg;
  auto* chop_cmd = app.add_subcommand("chop", "chop a Delzant corner");
  add_input(chop_cmd);
  chop_cmd->add_option("--vertex", vertex_arg, "X,Y")->required();
  chop_cmd->add_option("--size", size_arg, "P/Q")->required();

  std::string corpus_name;
  auto* corpus_cmd = app.add_subcommand("corpus", "bundled examples");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "list entry names");
  auto* corpus_get = corpus_cmd->add_subcommand("get", "print one entry");
  corpus_get->add_option("name", corpus_name)->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  auto emit = [&](const nlohmann::ordered_json& j) { out << j.dump() << '\n'; };

  try {
    if (*corpus_cmd) {
      if (*corpus_list)
        for (const auto& n : corpus_names()) out << n << '\n';
      if (*corpus_get) out << serialize_polygon(corpus_entry(corpus_name).polygon) << '\n';
      return kExitOk;
    }

    const std::string text = detail::read_input(input);

    if (*validate_cmd) {
      const auto report = validate(parse_polygon_unchecked(text));
      emit(to_json(report));
      return report.valid ? kExitOk : kExitInvalid;
    }

    const SemitoricPolygon p = parse_polygon(text);

    if (*classify_cmd) {
      const auto all = classify_all(p);
      if (format == "text") {
        detail::print_classification_table(out, all);
      } else {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& vc : all) j.push_back(to_json(vc));
        emit(j);
      }
    } else if (*graph_cmd) {
      const auto g = canonical_form(build_graph(p));
      if (format == "dot")
        out << emit_dot(g);
      else
        emit(to_json(g));
    } else if (*dh_cmd) {
      const auto report = dh_jump_report(p);
      nlohmann::ordered_json j = to_json(dh_function(p));
      j["jumps"] = to_json(report);
      j["consistent"] = report.consistent();
      emit(j);
    } else if (*adapt_cmd) {
      const auto v = adaptability(p);
      if (format == "text") {
        out << (v.adaptable ? "adaptable" : "non-adaptable") << '\n';
        for (const auto& [x, oc] : v.violating_levels)
          out << "violating level x=" << to_string(x) << " (E=" << oc.E << ", FF=" << oc.FF << ", S=" << oc.S
              << ")\n";
        for (const auto& up : v.delzant_presentations) out << "delzant cuts: " << cut_pattern(p, up) << '\n';
      } else {
        nlohmann::ordered_json j;
        j["verdict"] = v.adaptable ? "adaptable" : "non-adaptable";
        const auto body = to_json(v, p);
        for (const auto& [k, val] : body.items()) j[k] = val;
        emit(j);
      }
    } else if (*switch_cmd) {
      out << serialize_polygon(switch_cut(p, index)) << '\n';
    } else if (*pres_cmd) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      if (delzant_only) {
        for (const auto& q : delzant_presentations(p)) j.push_back(to_json(q));
      } else {
        for (const auto& [signs, q] : enumerate_presentations(p).members) {
          nlohmann::ordered_json m;
          m["signs"] = signs;
          m["delzant"] = is_delzant_polygon(q);
          m["polygon"] = to_json(q);
          j.push_back(std::move(m));
        }
      }
      emit(j);
    } else if (*si_cmd) {
      const Side s = side == "left" ? Side::Left : Side::Right;
      nlohmann::ordered_json j;
      j["side"] = side;
      j["self_intersection"] = self_intersection(p, s).str();
      emit(j);
    } else if (*chop_cmd) {
      out << serialize_polygon(corner_chop(p, detail::parse_point_arg(vertex_arg), parse_rational(size_arg)))
          << '\n';
    }
    return kExitOk;
  } catch (const ValidationFailure& e) {
    err << "error: invalid polygon\n" << to_json(e.report()).dump() << '\n';
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace semitoric
