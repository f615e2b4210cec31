#include "coxbip/report.hpp"

#include "json.hpp"

#include "coxbip/diagram.hpp"
#include "coxbip/error.hpp"

namespace coxbip {

using nlohmann::json;

namespace {

json set_json(const CoxeterMatrix& m, GeneratorSet s) {
  json out = json::array();
  s.for_each([&](Generator g) { out.push_back(m.name(g)); });
  return out;
}

json pair_json(const CoxeterMatrix& m, const std::optional<std::pair<Generator, Generator>>& p) {
  if (!p) return nullptr;
  return json::array({m.name(p->first), m.name(p->second)});
}

json witness_json(const CoxeterMatrix& m, const Witness& w) {
  json out;
  out["T"] = set_json(m, w.t);
  out["I"] = w.i ? set_json(m, *w.i) : json(nullptr);
  out["O"] = w.o ? set_json(m, *w.o) : json(nullptr);
  out["separated_pair"] = pair_json(m, w.separated_pair);
  out["missing_adjacency"] = pair_json(m, w.missing_adjacency);
  return out;
}

json census_json(const CensusReport& c) {
  auto run = [](const CensusRun& r) {
    json comps = json::array();
    for (const auto& comp : r.components) {
      comps.push_back({{"vertex_count", comp.vertex_count},
                       {"max_wall_distance_twice", comp.max_wall_distance.twice},
                       {"max_wall_distance", comp.max_wall_distance.to_string()},
                       {"touches_ball_boundary", comp.touches_ball_boundary},
                       {"essential", comp.essential}});
    }
    return json{{"radius", r.radius}, {"components", comps}, {"essential_count", r.essential_count}};
  };
  json out;
  out["subject"] = c.subject;
  out["walls"] = c.walls;
  out["k"] = c.k;
  out["margin"] = c.margin;
  out["outer"] = run(c.outer);
  out["inner"] = run(c.inner);
  out["stable"] = c.stable;
  out["pole_estimate"] = c.pole_estimate ? json(*c.pole_estimate) : json("unstable");
  out["notes"] = c.notes;
  return out;
}

template <typename T>
T get_as(const json& v, const std::string& where) {
  try {
    return v.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(where, e.what());
  }
}

GeneratorSet read_set(const CoxeterMatrix& m, const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "expected a list of generator names");
  GeneratorSet out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    auto g = m.find(get_as<std::string>(v[k], where + "/" + std::to_string(k)));
    if (!g) throw ParseError(where + "/" + std::to_string(k), "unknown generator");
    out.insert(*g);
  }
  return out;
}

std::optional<std::pair<Generator, Generator>> read_pair(const CoxeterMatrix& m, const json& v,
                                                         const std::string& where) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_array() || v.size() != 2) throw ParseError(where, "expected a pair of generator names");
  auto a = m.find(get_as<std::string>(v[0], where + "/0"));
  auto b = m.find(get_as<std::string>(v[1], where + "/1"));
  if (!a || !b) throw ParseError(where, "unknown generator");
  return std::make_pair(*a, *b);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + "/" + key, "missing key");
  return obj.at(key);
}

Witness read_witness(const CoxeterMatrix& m, const json& v, const std::string& where) {
  Witness w;
  w.t = read_set(m, field(v, "T", where), where + "/T");
  const json& i = field(v, "I", where);
  if (!i.is_null()) w.i = read_set(m, i, where + "/I");
  const json& o = field(v, "O", where);
  if (!o.is_null()) w.o = read_set(m, o, where + "/O");
  w.separated_pair = read_pair(m, field(v, "separated_pair", where), where + "/separated_pair");
  w.missing_adjacency = read_pair(m, field(v, "missing_adjacency", where), where + "/missing_adjacency");
  return w;
}

Condition read_condition(const json& v, const std::string& where) {
  try {
    return condition_from_string(get_as<std::string>(v, where));
  } catch (const InvalidArgument& e) {
    throw ParseError(where, e.what());
  }
}

CensusReport read_census(const json& v, const std::string& where) {
  auto run = [&](const json& r, const std::string& w) {
    CensusRun out;
    out.radius = get_as<std::size_t>(field(r, "radius", w), w + "/radius");
    out.essential_count = get_as<std::size_t>(field(r, "essential_count", w), w + "/essential_count");
    const json& comps = field(r, "components", w);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      std::string cw = w + "/components/" + std::to_string(k);
      ComponentSummary c;
      c.vertex_count = get_as<std::size_t>(field(comps[k], "vertex_count", cw), cw + "/vertex_count");
      c.max_wall_distance = HalfInt::from_twice(
          get_as<long long>(field(comps[k], "max_wall_distance_twice", cw), cw + "/max_wall_distance_twice"));
      c.touches_ball_boundary =
          get_as<bool>(field(comps[k], "touches_ball_boundary", cw), cw + "/touches_ball_boundary");
      c.essential = get_as<bool>(field(comps[k], "essential", cw), cw + "/essential");
      out.components.push_back(c);
    }
    return out;
  };
  CensusReport c;
  c.subject = get_as<std::string>(field(v, "subject", where), where + "/subject");
  c.walls = get_as<std::vector<std::string>>(field(v, "walls", where), where + "/walls");
  c.k = get_as<int>(field(v, "k", where), where + "/k");
  c.margin = get_as<int>(field(v, "margin", where), where + "/margin");
  c.outer = run(field(v, "outer", where), where + "/outer");
  c.inner = run(field(v, "inner", where), where + "/inner");
  c.stable = get_as<bool>(field(v, "stable", where), where + "/stable");
  const json& pe = field(v, "pole_estimate", where);
  if (pe.is_number_integer()) c.pole_estimate = pe.get<std::size_t>();
  else if (pe != "unstable") throw ParseError(where + "/pole_estimate", "expected an integer or \"unstable\"");
  c.notes = get_as<std::vector<std::string>>(field(v, "notes", where), where + "/notes");
  return c;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

}  // namespace

DiagramSummary summarize_diagram(const CoxeterMatrix& m) {
  DiagramSummary d;
  const GeneratorSet all = m.all();
  d.irreducible_components = irreducible_components(m, all);
  d.odd_components = odd_components(m);
  for (GeneratorSet c : spherical_factors(m)) d.spherical_factors.push_back({c, classify_irreducible(m, c)});
  d.two_spherical = is_2_spherical(m, all);
  d.irreducible = d.irreducible_components.size() == 1;
  d.spherical = is_spherical(m, all);
  return d;
}

AnalysisReport analyze(const CoxeterMatrix& m, std::string source, bool all_witnesses, std::size_t cap) {
  AnalysisReport r;
  r.source = std::move(source);
  r.input = m;
  r.diagram = summarize_diagram(m);
  r.verdict = bipolar_verdict(m, all_witnesses, cap);
  return r;
}

std::string report_to_json(const AnalysisReport& r, int indent) {
  const CoxeterMatrix& m = r.input;
  json doc;
  doc["schema_version"] = r.schema_version;
  doc["tool"] = {{"name", "coxbip"}, {"version", r.tool_version}};
  doc["seed"] = r.seed;
  doc["source"] = r.source;
  doc["input"] = json::parse(to_input_json(m));

  json diagram;
  diagram["irreducible_components"] = json::array();
  for (auto c : r.diagram.irreducible_components) diagram["irreducible_components"].push_back(set_json(m, c));
  diagram["odd_components"] = json::array();
  for (auto c : r.diagram.odd_components) diagram["odd_components"].push_back(set_json(m, c));
  diagram["spherical_factors"] = json::array();
  for (const auto& f : r.diagram.spherical_factors) {
    diagram["spherical_factors"].push_back({{"members", set_json(m, f.members)}, {"type", f.type.to_string()}});
  }
  diagram["two_spherical"] = r.diagram.two_spherical;
  diagram["irreducible"] = r.diagram.irreducible;
  diagram["spherical"] = r.diagram.spherical;
  doc["diagram"] = diagram;

  json verdict;
  verdict["bipolar"] = r.verdict.bipolar;
  verdict["failed_condition"] = to_string(r.verdict.failed_condition);
  verdict["witness"] = r.verdict.witness ? witness_json(m, *r.verdict.witness) : json(nullptr);
  verdict["all_failures"] = json::array();
  for (const auto& f : r.verdict.all_failures) {
    verdict["all_failures"].push_back({{"condition", to_string(f.condition)}, {"witness", witness_json(m, f.witness)}});
  }
  doc["verdict"] = verdict;

  doc["census"] = json::array();
  for (const auto& e : r.census) doc["census"].push_back({{"generator", e.generator}, {"report", census_json(e.report)}});
  return doc.dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
  const json doc = parse_document(text);
  AnalysisReport r;
  r.schema_version = get_as<std::string>(field(doc, "schema_version", ""), "/schema_version");
  if (r.schema_version != kSchemaVersion) {
    throw ParseError("/schema_version", "unsupported schema version '" + r.schema_version + "'");
  }
  r.tool_version = get_as<std::string>(field(field(doc, "tool", ""), "version", "/tool"), "/tool/version");
  r.seed = get_as<std::uint64_t>(field(doc, "seed", ""), "/seed");
  r.source = get_as<std::string>(field(doc, "source", ""), "/source");
  try {
    r.input = parse_coxeter_input(field(doc, "input", "").dump());
  } catch (const ParseError& e) {
    throw ParseError("/input" + (e.where().starts_with("/") ? e.where() : std::string()), e.what());
  }
  const CoxeterMatrix& m = r.input;

  const json& d = field(doc, "diagram", "");
  for (std::size_t k = 0; const auto& c : field(d, "irreducible_components", "/diagram")) {
    r.diagram.irreducible_components.push_back(read_set(m, c, "/diagram/irreducible_components/" + std::to_string(k++)));
  }
  for (std::size_t k = 0; const auto& c : field(d, "odd_components", "/diagram")) {
    r.diagram.odd_components.push_back(read_set(m, c, "/diagram/odd_components/" + std::to_string(k++)));
  }
  for (std::size_t k = 0; const auto& f : field(d, "spherical_factors", "/diagram")) {
    std::string w = "/diagram/spherical_factors/" + std::to_string(k++);
    SphericalFactor sf;
    sf.members = read_set(m, field(f, "members", w), w + "/members");
    try {
      sf.type = parse_type_label(get_as<std::string>(field(f, "type", w), w + "/type"));
    } catch (const InvalidArgument& e) {
      throw ParseError(w + "/type", e.what());
    }
    r.diagram.spherical_factors.push_back(sf);
  }
  r.diagram.two_spherical = get_as<bool>(field(d, "two_spherical", "/diagram"), "/diagram/two_spherical");
  r.diagram.irreducible = get_as<bool>(field(d, "irreducible", "/diagram"), "/diagram/irreducible");
  r.diagram.spherical = get_as<bool>(field(d, "spherical", "/diagram"), "/diagram/spherical");

  const json& v = field(doc, "verdict", "");
  r.verdict.bipolar = get_as<bool>(field(v, "bipolar", "/verdict"), "/verdict/bipolar");
  r.verdict.failed_condition = read_condition(field(v, "failed_condition", "/verdict"), "/verdict/failed_condition");
  const json& w = field(v, "witness", "/verdict");
  if (!w.is_null()) r.verdict.witness = read_witness(m, w, "/verdict/witness");
  for (std::size_t k = 0; const auto& f : field(v, "all_failures", "/verdict")) {
    std::string fw = "/verdict/all_failures/" + std::to_string(k++);
    r.verdict.all_failures.push_back(
        {read_condition(field(f, "condition", fw), fw + "/condition"), read_witness(m, field(f, "witness", fw), fw + "/witness")});
  }

  for (std::size_t k = 0; const auto& e : field(doc, "census", "")) {
    std::string ew = "/census/" + std::to_string(k++);
    r.census.push_back({get_as<std::string>(field(e, "generator", ew), ew + "/generator"),
                        read_census(field(e, "report", ew), ew + "/report")});
  }
  return r;
}

std::string census_to_json(const CensusReport& c, int indent) { return census_json(c).dump(indent); }

CensusReport census_from_json(const std::string& text) { return read_census(parse_document(text), ""); }

std::string diagram_to_dot(const CoxeterMatrix& m, const std::string& graph_name) {
  std::string out = "graph \"" + graph_name + "\" {\n  node [shape=circle];\n";
  for (Generator i = 0; i < m.rank(); ++i) out += "  \"" + m.name(i) + "\";\n";
  for (Generator i = 0; i < m.rank(); ++i) {
    for (Generator j = i + 1; j < m.rank(); ++j) {
      const Label l = m.m(i, j);
      if (l == kInfinity) continue;
      out += "  \"" + m.name(i) + "\" -- \"" + m.name(j) + "\"";
      out += " [label=\"" + std::to_string(l) + "\"";
      if (l == 2) out += ", style=dotted";
      if (l % 2 == 1) out += ", style=bold, color=red";
      out += "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace coxbip
