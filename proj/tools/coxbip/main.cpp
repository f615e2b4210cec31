// coxbip: diagram analysis and ball census for Coxeter groups.
//
// Exit codes: analyze 0 bipolar / 1 not bipolar; census 0 stable / 3 unstable;
// probe nearly 0 pass / 1 fail; anything that goes wrong is 2.

#include <coxbip/ball.hpp>
#include <coxbip/catalog.hpp>
#include <coxbip/census.hpp>
#include <coxbip/criteria.hpp>
#include <coxbip/diagram.hpp>
#include <coxbip/error.hpp>
#include <coxbip/report.hpp>
#include <coxbip/walls.hpp>
#include <coxbip/word_engine.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

using namespace coxbip;

namespace {

constexpr int kExitError = 2;
constexpr int kExitUnstable = 3;
constexpr std::size_t kListedComponents = 8;

struct Caps {
  std::size_t max_word_length = 40;
  std::size_t ball_cap = kDefaultBallCap;
  std::size_t enumeration_cap = kDefaultEnumerationCap;

  void add_to(CLI::App* app, bool ball) {
    app->add_option("--max-word-length", max_word_length, "longest accepted input word")->capture_default_str();
    app->add_option("--enumeration-cap", enumeration_cap, "largest rank for subset enumeration")
        ->capture_default_str();
    if (ball) app->add_option("--ball-cap", ball_cap, "largest Cayley ball, in vertices")->capture_default_str();
  }
  EngineLimits limits() const {
    EngineLimits l;
    l.max_word_length = max_word_length;
    return l;
  }
};

std::string set_names(const CoxeterMatrix& m, GeneratorSet s) { return format_set(m, s); }

std::string pair_names(const CoxeterMatrix& m, const std::pair<Generator, Generator>& p) {
  return "(" + m.name(p.first) + "," + m.name(p.second) + ")";
}

void print_witness(std::ostream& out, const CoxeterMatrix& m, const Witness& w, const std::string& indent) {
  out << indent << "T = " << set_names(m, w.t) << "\n";
  if (w.i) out << indent << "I = " << set_names(m, *w.i) << "\n";
  if (w.o) out << indent << "O = " << set_names(m, *w.o) << "\n";
  if (w.separated_pair) out << indent << "separated pair " << pair_names(m, *w.separated_pair) << "\n";
  if (w.missing_adjacency) {
    out << indent << "non-adjacent pair " << pair_names(m, *w.missing_adjacency) << " (m = "
        << label_to_string(m.m(w.missing_adjacency->first, w.missing_adjacency->second)) << ")\n";
  }
}

void print_report(std::ostream& out, const AnalysisReport& r) {
  const CoxeterMatrix& m = r.input;
  out << "source: " << r.source << "\n";
  out << "rank: " << m.rank() << "\n";
  out << "irreducible components:";
  for (auto c : r.diagram.irreducible_components) out << " " << set_names(m, c);
  out << "\nodd components:";
  for (auto c : r.diagram.odd_components) out << " " << set_names(m, c);
  out << "\nspherical factors:";
  if (r.diagram.spherical_factors.empty()) out << " none";
  for (const auto& f : r.diagram.spherical_factors) out << " " << set_names(m, f.members) << " " << f.type.to_string();
  out << "\n2-spherical: " << (r.diagram.two_spherical ? "yes" : "no") << "\n";
  if (r.verdict.bipolar) {
    out << "verdict: bipolar\n";
  } else {
    out << "verdict: not bipolar (condition " << to_string(r.verdict.failed_condition) << ")\n";
    if (r.verdict.witness) print_witness(out, m, *r.verdict.witness, "  ");
  }
  if (!r.verdict.all_failures.empty()) {
    out << "all failures (" << r.verdict.all_failures.size() << "):\n";
    for (const auto& f : r.verdict.all_failures) {
      out << "  condition " << to_string(f.condition) << "\n";
      print_witness(out, m, f.witness, "    ");
    }
  }
}

void print_census(std::ostream& out, const CensusReport& c) {
  out << "subject: " << c.subject << "\n";
  out << "walls:";
  for (const auto& w : c.walls) out << " [" << w << "]";
  out << "\nk = " << c.k << ", margin = " << c.margin << "\n";
  for (const CensusRun* run : {&c.outer, &c.inner}) {
    out << "radius " << run->radius << ": " << run->components.size() << " components, " << run->essential_count
        << " essential\n";
    // Components come largest first; the tail is usually many small inessential pieces.
    std::size_t shown = 0, hidden = 0;
    for (const auto& comp : run->components) {
      if (shown == kListedComponents && !comp.essential) {
        ++hidden;
        continue;
      }
      out << "  vertices " << comp.vertex_count << ", max distance " << comp.max_wall_distance.to_string()
          << (comp.touches_ball_boundary ? ", touches boundary" : "") << (comp.essential ? ", essential" : "")
          << "\n";
      shown += shown < kListedComponents;
    }
    if (hidden) out << "  ... " << hidden << " more inessential\n";
  }
  out << "stable: " << (c.stable ? "yes" : "no") << "\n";
  out << "pole estimate: " << (c.pole_estimate ? std::to_string(*c.pole_estimate) : "unstable") << "\n";
  for (const auto& n : c.notes) out << "note: " << n << "\n";
}

Element read_element(WordEngine& engine, const std::string& text) {
  return engine.from_word(engine.parse_word(text));
}

Reflection read_reflection(WordEngine& engine, const std::string& text) {
  return require_reflection(engine, read_element(engine, text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipolarity analysis for Coxeter groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string input;
  Caps caps;

  auto* analyze_cmd = app.add_subcommand("analyze", "decide bipolarity from the diagram");
  bool all_witnesses = false;
  bool analyze_json = false;
  analyze_cmd->add_option("input", input, "input file or catalog:NAME")->required();
  analyze_cmd->add_flag("--all-witnesses", all_witnesses, "collect every failing witness");
  analyze_cmd->add_flag("--json", analyze_json, "print the machine-readable report");
  caps.add_to(analyze_cmd, false);

  auto* census_cmd = app.add_subcommand("census", "count complement components around a wall");
  std::string generator;
  CensusOptions census_opts;
  bool census_json_out = false;
  census_cmd->add_option("input", input, "input file or catalog:NAME")->required();
  census_cmd->add_option("--generator,-g", generator, "generator name, or a word for any reflection")->required();
  census_cmd->add_option("--k", census_opts.k, "neighbourhood radius")->required()->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--radius", census_opts.radius, "ball radius")->required()->check(CLI::Range(2, 64));
  census_cmd->add_option("--margin", census_opts.margin, "depth margin for essential components")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  census_cmd->add_flag("--json", census_json_out, "print JSON");
  caps.add_to(census_cmd, true);

  auto* probe_cmd = app.add_subcommand("probe", "per-wall and per-vertex probes");
  probe_cmd->add_option("input", input, "input file or catalog:NAME")->required();
  probe_cmd->require_subcommand(1);
  int probe_k = 2;
  std::size_t probe_radius = 8;
  std::string word_a, word_b;

  auto* dominate_cmd = probe_cmd->add_subcommand("dominate", "does the wall of r stay near the wall of t");
  dominate_cmd->add_option("r", word_a)->required();
  dominate_cmd->add_option("t", word_b)->required();
  dominate_cmd->add_option("--k", probe_k)->capture_default_str();
  dominate_cmd->add_option("--radius", probe_radius, "outer radius; also run at radius - 2")
      ->capture_default_str()
      ->check(CLI::Range(3, 64));
  caps.add_to(dominate_cmd, true);

  auto* involution_cmd = probe_cmd->add_subcommand("involution", "census around the walls of an involution");
  involution_cmd->add_option("w", word_a)->required();
  involution_cmd->add_option("--k", probe_k)->capture_default_str();
  involution_cmd->add_option("--radius", probe_radius)->capture_default_str()->check(CLI::Range(2, 64));
  caps.add_to(involution_cmd, true);

  auto* jtu_cmd = probe_cmd->add_subcommand("jtu", "J, T, U sets of a vertex and a wall");
  jtu_cmd->add_option("v", word_a)->required();
  jtu_cmd->add_option("r", word_b)->required();
  caps.add_to(jtu_cmd, false);

  auto* nearly_cmd = probe_cmd->add_subcommand("nearly", "per-vertex nearly-bipolar conditions");
  nearly_cmd->add_option("v", word_a)->required();
  nearly_cmd->add_option("r", word_b)->required();
  caps.add_to(nearly_cmd, false);

  auto* emit_cmd = app.add_subcommand("emit", "write the report as JSON or the diagram as DOT");
  std::string format;
  std::string output;
  emit_cmd->add_option("input", input)->required();
  emit_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"json", "dot"}));
  emit_cmd->add_option("-o,--output", output, "output file (default stdout)");
  caps.add_to(emit_cmd, false);

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (catalog_cmd->parsed()) {
      for (const auto& name : catalog_names()) std::cout << "catalog:" << name << "\n";
      return 0;
    }

    const CoxeterMatrix m = load_input(input);

    if (analyze_cmd->parsed()) {
      AnalysisReport report = analyze(m, input, all_witnesses, caps.enumeration_cap);
      if (analyze_json) {
        std::cout << report_to_json(report) << "\n";
      } else {
        print_report(std::cout, report);
      }
      return report.verdict.bipolar ? 0 : 1;
    }

    if (emit_cmd->parsed()) {
      std::string text;
      if (format == "dot") {
        text = diagram_to_dot(m);
      } else {
        AnalysisReport report = analyze(m, input, false, caps.enumeration_cap);
        text = report_to_json(report) + "\n";
      }
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!out || !(out << text)) throw Error("cannot write '" + output + "'");
      }
      return 0;
    }

    WordEngine engine(m, caps.limits());

    if (census_cmd->parsed()) {
      census_opts.max_vertices = caps.ball_cap;
      Reflection r = read_reflection(engine, generator);
      CensusReport report = pole_census(engine, r, census_opts);
      if (census_json_out) {
        std::cout << census_to_json(report) << "\n";
      } else {
        print_census(std::cout, report);
      }
      return report.stable ? 0 : kExitUnstable;
    }

    if (dominate_cmd->parsed()) {
      Reflection r = read_reflection(engine, word_a);
      Reflection t = read_reflection(engine, word_b);
      std::cout << "r = " << engine.format(r.element) << "\nt = " << engine.format(t.element) << "\nk = " << probe_k
                << "\n";
      std::vector<DominationReport> runs;
      for (std::size_t radius : {probe_radius - 2, probe_radius}) {
        runs.push_back(domination_probe(engine, r, t, probe_k, radius, caps.ball_cap));
        const auto& d = runs.back();
        std::cout << "radius " << d.radius << ": max escape distance " << d.max_escape_distance.to_string() << " over "
                  << d.samples << " vertices, dominated_within_ball " << (d.dominated_within_ball ? "true" : "false")
                  << "\n";
      }
      bool bounded = runs[0].max_escape_distance == runs[1].max_escape_distance;
      std::cout << "escape distance bounded across radii: " << (bounded ? "yes" : "no") << "\n";
      return 0;
    }

    if (involution_cmd->parsed()) {
      Element w = read_element(engine, word_a);
      CensusOptions o;
      o.k = probe_k;
      o.radius = probe_radius;
      o.max_vertices = caps.ball_cap;
      CensusReport report = involution_census(engine, w, o);
      print_census(std::cout, report);
      const bool unipolar = report.stable && report.pole_estimate == 1;
      std::cout << "unipolar: " << (unipolar ? "yes" : report.stable ? "no" : "undetermined") << "\n";
      return 0;
    }

    if (jtu_cmd->parsed() || nearly_cmd->parsed()) {
      Element v = read_element(engine, word_a);
      Reflection r = read_reflection(engine, word_b);
      JTU sets = jtu_sets(engine, v, r);
      std::cout << "v = " << engine.format(v) << "\nr = " << engine.format(r.element)
                << "\nv^-1 r v = " << engine.format(sets.translated) << "\n";
      std::cout << "J = " << set_names(m, sets.j) << "\nT = " << set_names(m, sets.t) << "\nU = " << set_names(m, sets.u)
                << "\n";
      if (jtu_cmd->parsed()) {
        const GeneratorSet tp = perp(m, sets.t);
        const bool ok = sets.j.subset_of(sets.t) && tp.subset_of(sets.u) && sets.u.subset_of(sets.t | tp);
        std::cout << "T-perp = " << set_names(m, tp) << "\n";
        std::cout << "J in T, T-perp in U, U in T + T-perp: " << (ok ? "hold" : "VIOLATED") << "\n";
        return ok ? 0 : 1;
      }
      VertexCheck check = nearly_bipolar_conditions(engine, v, r);
      if (check.passed) {
        std::cout << "nearly bipolar conditions: pass\n";
        return 0;
      }
      std::cout << "nearly bipolar conditions: fail (" << to_string(check.failed_condition) << ")\n";
      if (check.witness) print_witness(std::cout, m, *check.witness, "  ");
      return 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
