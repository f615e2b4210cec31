#include "coxbip/coxeter_matrix.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "coxbip/error.hpp"
#include "json.hpp"

namespace coxbip {

using nlohmann::json;

CoxeterMatrix::CoxeterMatrix(std::size_t rank, Label default_label,
                             const std::vector<LabelEntry>& entries,
                             std::vector<std::string> names)
    : rank_(rank), default_(default_label), names_(std::move(names)) {
  if (rank == 0) throw InvalidArgument("rank must be at least 1");
  if (rank > kMaxRank) {
    throw InvalidArgument("rank " + std::to_string(rank) + " exceeds the supported maximum " +
                          std::to_string(kMaxRank));
  }
  if (default_label < 2) throw InvalidArgument("default label must be 2 or inf");
  labels_.assign(rank * rank, default_label);
  for (std::size_t i = 0; i < rank; ++i) labels_[i * rank + i] = 1;

  std::vector<bool> seen(rank * rank, false);
  for (const auto& e : entries) {
    if (e.i >= rank || e.j >= rank) {
      throw InvalidArgument("label entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                            ") out of range for rank " + std::to_string(rank));
    }
    if (e.i == e.j) throw InvalidArgument("diagonal label entry at " + std::to_string(e.i));
    if (e.m < 2) {
      throw InvalidArgument("label m(" + std::to_string(e.i) + "," + std::to_string(e.j) +
                            ") must be >= 2");
    }
    std::size_t ij = e.i * rank + e.j;
    std::size_t ji = e.j * rank + e.i;
    if (seen[ij] || seen[ji]) {
      if (labels_[ij] != e.m) {
        throw InvalidArgument("asymmetric labels for pair (" + std::to_string(e.i) + "," +
                              std::to_string(e.j) + ")");
      }
      throw InvalidArgument("duplicate label for pair (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + ")");
    }
    seen[ij] = seen[ji] = true;
    labels_[ij] = labels_[ji] = e.m;
  }

  if (names_.empty()) {
    for (std::size_t i = 0; i < rank; ++i) names_.push_back("s" + std::to_string(i + 1));
  }
  if (names_.size() != rank) throw InvalidArgument("names must list exactly rank entries");
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != rank) throw InvalidArgument("generator names must be distinct");
  for (const auto& n : names_) {
    if (n.empty() || n.find_first_of(" \t\n,") != std::string::npos) {
      throw InvalidArgument("generator name '" + n + "' must be non-empty without spaces or commas");
    }
  }
}

std::optional<Generator> CoxeterMatrix::find(std::string_view name) const {
  for (std::size_t i = 0; i < rank_; ++i) {
    if (names_[i] == name) return static_cast<Generator>(i);
  }
  return std::nullopt;
}

std::vector<LabelEntry> CoxeterMatrix::explicit_entries() const {
  std::vector<LabelEntry> out;
  for (Generator i = 0; i < rank_; ++i) {
    for (Generator j = i + 1; j < rank_; ++j) {
      if (m(i, j) != default_) out.push_back({i, j, m(i, j)});
    }
  }
  return out;
}

std::string label_to_string(Label m) {
  return m == kInfinity ? std::string("inf") : std::to_string(m);
}

std::string format_set(const CoxeterMatrix& m, GeneratorSet set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Generator g) {
    if (!first) out += ",";
    out += g < m.rank() ? m.name(g) : std::to_string(g);
    first = false;
  });
  return out + "}";
}

namespace {

Label parse_label(const json& v, const std::string& where, bool allow_default_spelling) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s == "inf") return kInfinity;
    if (allow_default_spelling && s == "2") return 2;
    throw ParseError(where, "expected an integer >= 2 or \"inf\", got \"" + s + "\"");
  }
  if (v.is_number_integer()) {
    auto x = v.get<std::int64_t>();
    if (x < 2) throw ParseError(where, "label must be >= 2, got " + std::to_string(x));
    if (x > 1'000'000) throw ParseError(where, "label too large");
    return static_cast<Label>(x);
  }
  throw ParseError(where, "expected an integer >= 2 or \"inf\"");
}

}  // namespace

CoxeterMatrix parse_coxeter_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("/", "document must be a JSON object");

  static const std::set<std::string> known = {"rank", "default", "labels", "names", "description"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.contains(key)) throw ParseError("/" + key, "unknown key");
  }

  if (!doc.contains("rank")) throw ParseError("/rank", "missing required key");
  const auto& rank_v = doc["rank"];
  if (!rank_v.is_number_integer()) throw ParseError("/rank", "rank must be an integer");
  auto rank = rank_v.get<std::int64_t>();
  if (rank < 1) throw ParseError("/rank", "rank must be at least 1");
  if (rank > static_cast<std::int64_t>(kMaxRank)) {
    throw ParseError("/rank", "rank exceeds the supported maximum " + std::to_string(kMaxRank));
  }

  if (!doc.contains("default")) throw ParseError("/default", "missing required key");
  const auto& def_v = doc["default"];
  // "2" and "inf" are the documented spellings; any other label is accepted too.
  Label def = parse_label(def_v, "/default", true);

  std::vector<LabelEntry> entries;
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array()) throw ParseError("/labels", "labels must be a list of [i, j, m]");
    std::vector<Label> seen(static_cast<std::size_t>(rank * rank), 0);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      std::string where = "/labels/" + std::to_string(k);
      const auto& t = labels[k];
      if (!t.is_array() || t.size() != 3) throw ParseError(where, "expected a triple [i, j, m]");
      for (int c = 0; c < 2; ++c) {
        if (!t[c].is_number_integer()) throw ParseError(where, "generator index must be an integer");
        auto x = t[c].get<std::int64_t>();
        if (x < 0 || x >= rank) throw ParseError(where, "generator index out of range");
      }
      auto i = static_cast<Generator>(t[0].get<std::int64_t>());
      auto j = static_cast<Generator>(t[1].get<std::int64_t>());
      if (i == j) throw ParseError(where, "diagonal entries are fixed to 1");
      Label m = parse_label(t[2], where, false);
      auto& prev_ij = seen[i * rank + j];
      auto& prev_ji = seen[j * rank + i];
      if (prev_ij != 0 || prev_ji != 0) {
        if ((prev_ij != 0 ? prev_ij : prev_ji) != m) {
          throw ParseError(where, "asymmetric label: pair already given a different value");
        }
        throw ParseError(where, "duplicate label triple");
      }
      prev_ij = m;
      entries.push_back({i, j, m});
    }
  }

  std::vector<std::string> names;
  if (doc.contains("names")) {
    const auto& n = doc["names"];
    if (!n.is_array() || n.size() != static_cast<std::size_t>(rank)) {
      throw ParseError("/names", "names must be a list of exactly rank strings");
    }
    for (std::size_t k = 0; k < n.size(); ++k) {
      if (!n[k].is_string()) throw ParseError("/names/" + std::to_string(k), "name must be a string");
      names.push_back(n[k].get<std::string>());
    }
  }
  if (doc.contains("description") && !doc["description"].is_string()) {
    throw ParseError("/description", "description must be a string");
  }

  try {
    return CoxeterMatrix(static_cast<std::size_t>(rank), def, entries, std::move(names));
  } catch (const InvalidArgument& e) {
    throw ParseError("/", e.what());
  }
}

std::string to_input_json(const CoxeterMatrix& m, int indent) {
  json doc;
  doc["rank"] = m.rank();
  if (m.default_label() == kInfinity) {
    doc["default"] = "inf";
  } else if (m.default_label() == 2) {
    doc["default"] = "2";
  } else {
    doc["default"] = m.default_label();
  }
  json labels = json::array();
  for (const auto& e : m.explicit_entries()) {
    json label = e.m == kInfinity ? json("inf") : json(e.m);
    labels.push_back(json::array({e.i, e.j, label}));
  }
  doc["labels"] = labels;
  doc["names"] = m.names();
  return doc.dump(indent);
}

}  // namespace coxbip
