#include "coxbip/spherical.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <utility>

#include "coxbip/diagram.hpp"
#include "coxbip/error.hpp"

namespace coxbip {

unsigned long long TypeLabel::order() const {
  auto factorial = [](unsigned long long n) {
    unsigned long long f = 1;
    for (unsigned long long k = 2; k <= n; ++k) f *= k;
    return f;
  };
  const unsigned long long n = parameter;
  switch (family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return (1ULL << n) * factorial(n);
    case Family::D: return (1ULL << (n - 1)) * factorial(n);
    case Family::E6: return 51840ULL;
    case Family::E7: return 2903040ULL;
    case Family::E8: return 696729600ULL;
    case Family::F4: return 1152ULL;
    case Family::H3: return 120ULL;
    case Family::H4: return 14400ULL;
    case Family::I2: return 2ULL * n;
    case Family::NonSpherical: return 0;
  }
  return 0;
}

std::string TypeLabel::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(parameter);
    case Family::B: return "B" + std::to_string(parameter);
    case Family::D: return "D" + std::to_string(parameter);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(parameter) + ")";
    case Family::NonSpherical: return "non-spherical";
  }
  return "?";
}

TypeLabel parse_type_label(const std::string& text) {
  static const std::pair<const char*, Family> fixed[] = {
      {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}, {"F4", Family::F4},
      {"H3", Family::H3}, {"H4", Family::H4}, {"non-spherical", Family::NonSpherical}};
  for (const auto& [name, family] : fixed) {
    if (text == name) return TypeLabel{family, 0};
  }
  auto number = [&](std::string_view digits) -> Label {
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("malformed type label '" + text + "'");
    }
    return static_cast<Label>(std::stoul(std::string(digits)));
  };
  std::string_view v(text);
  if (v.starts_with("I2(") && v.ends_with(")")) return TypeLabel{Family::I2, number(v.substr(3, v.size() - 4))};
  if (!v.empty() && (v[0] == 'A' || v[0] == 'B' || v[0] == 'D')) {
    Family f = v[0] == 'A' ? Family::A : v[0] == 'B' ? Family::B : Family::D;
    return TypeLabel{f, number(v.substr(1))};
  }
  throw InvalidArgument("malformed type label '" + text + "'");
}

namespace {

struct Shape {
  std::vector<Generator> vertices;
  std::vector<std::vector<Generator>> nbrs;  // indices into `vertices`
  std::size_t edges = 0;
};

/// Walk a simple path starting at `from`, leaving through `next`, until a leaf.
/// Returns the labels met in order.
std::vector<Label> walk_arm(const CoxeterMatrix& m, const Shape& s, std::size_t from,
                            std::size_t next) {
  std::vector<Label> labels;
  std::size_t prev = from;
  std::size_t cur = next;
  labels.push_back(m.m(s.vertices[prev], s.vertices[cur]));
  while (s.nbrs[cur].size() == 2) {
    std::size_t nxt = s.nbrs[cur][0] == prev ? s.nbrs[cur][1] : s.nbrs[cur][0];
    labels.push_back(m.m(s.vertices[cur], s.vertices[nxt]));
    prev = cur;
    cur = nxt;
  }
  if (s.nbrs[cur].size() != 1) labels.clear();  // ran into another branch point
  return labels;
}

bool all_three(const std::vector<Label>& labels) {
  return std::all_of(labels.begin(), labels.end(), [](Label x) { return x == 3; });
}

TypeLabel classify_path(const std::vector<Label>& labels) {
  const auto rank = static_cast<Label>(labels.size() + 1);
  if (all_three(labels)) return {Family::A, rank};
  // Orient so that a special label, if any, sits nearer the front.
  std::vector<Label> fwd = labels;
  std::vector<Label> rev(labels.rbegin(), labels.rend());
  for (const auto& l : {fwd, rev}) {
    std::vector<Label> rest(l.begin() + 1, l.end());
    if (l.front() == 4 && all_three(rest)) return {Family::B, rank};
    if (l.front() == 5 && all_three(rest) && (rank == 3 || rank == 4)) {
      return {rank == 3 ? Family::H3 : Family::H4, 0};
    }
  }
  if (rank == 4 && labels[0] == 3 && labels[1] == 4 && labels[2] == 3) return {Family::F4, 0};
  return {};
}

}  // namespace

TypeLabel classify_irreducible(const CoxeterMatrix& m, GeneratorSet t) {
  if (t.empty()) throw InvalidArgument("cannot classify the empty set");
  if (!is_irreducible(m, t)) throw InvalidArgument("classify_irreducible needs an irreducible set");

  Shape s;
  s.vertices = t.members();
  const std::size_t n = s.vertices.size();
  if (n == 1) return {Family::A, 1};
  s.nbrs.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Label l = m.m(s.vertices[a], s.vertices[b]);
      if (l == kInfinity) return {};
      if (l != 2) {
        s.nbrs[a].push_back(b);
        s.nbrs[b].push_back(a);
        ++s.edges;
      }
    }
  }
  if (n == 2) {
    Label l = m.m(s.vertices[0], s.vertices[1]);
    return l == 3 ? TypeLabel{Family::A, 2} : TypeLabel{Family::I2, l};
  }
  // Finite types of rank >= 3 are trees with labels in {3, 4, 5}.
  if (s.edges != n - 1) return {};

  std::vector<std::size_t> leaves, branches;
  for (std::size_t v = 0; v < n; ++v) {
    if (s.nbrs[v].size() == 1) leaves.push_back(v);
    if (s.nbrs[v].size() >= 3) branches.push_back(v);
  }
  if (branches.empty()) return classify_path(walk_arm(m, s, leaves[0], s.nbrs[leaves[0]][0]));

  if (branches.size() != 1 || s.nbrs[branches[0]].size() != 3) return {};
  const std::size_t centre = branches[0];
  std::array<std::size_t, 3> arms{};
  for (std::size_t k = 0; k < 3; ++k) {
    auto labels = walk_arm(m, s, centre, s.nbrs[centre][k]);
    if (labels.empty() || !all_three(labels)) return {};
    arms[k] = labels.size();
  }
  std::sort(arms.begin(), arms.end());
  const auto rank = static_cast<Label>(n);
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, rank};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return {arms[2] == 2 ? Family::E6 : arms[2] == 3 ? Family::E7 : Family::E8, 0};
  }
  return {};
}

bool is_spherical(const CoxeterMatrix& m, GeneratorSet j) {
  for (GeneratorSet c : irreducible_components(m, j)) {
    if (!classify_irreducible(m, c).spherical()) return false;
  }
  return true;
}

bool is_2_spherical(const CoxeterMatrix& m, GeneratorSet j) {
  auto mem = j.members();
  if (!j.subset_of(m.all())) throw InvalidArgument("generator set exceeds rank");
  for (std::size_t a = 0; a < mem.size(); ++a) {
    for (std::size_t b = a + 1; b < mem.size(); ++b) {
      if (m.m(mem[a], mem[b]) == kInfinity) return false;
    }
  }
  return true;
}

std::vector<GeneratorSet> spherical_factors(const CoxeterMatrix& m) {
  std::vector<GeneratorSet> out;
  for (GeneratorSet c : irreducible_components(m, m.all())) {
    if (classify_irreducible(m, c).spherical()) out.push_back(c);
  }
  return out;
}

}  // namespace coxbip
