#include "coxbip/diagram.hpp"

#include <string>

#include "coxbip/error.hpp"

namespace coxbip {

namespace {

void check_range(const CoxeterMatrix& m, GeneratorSet j) {
  if (!j.subset_of(m.all())) {
    throw InvalidArgument("generator set " + format_set(m, j) + " exceeds rank " +
                          std::to_string(m.rank()));
  }
}

template <typename Edge>
std::vector<GeneratorSet> components_by(const CoxeterMatrix& m, GeneratorSet vertices, Edge edge) {
  std::vector<GeneratorSet> out;
  GeneratorSet left = vertices;
  while (!left.empty()) {
    GeneratorSet block = GeneratorSet::single(left.lowest());
    GeneratorSet frontier = block;
    while (!frontier.empty()) {
      Generator x = frontier.lowest();
      frontier.erase(x);
      (left - block).for_each([&](Generator y) {
        if (edge(x, y)) {
          block.insert(y);
          frontier.insert(y);
        }
      });
    }
    out.push_back(block);
    left = left - block;
  }
  (void)m;
  return out;
}

}  // namespace

GeneratorSet perp(const CoxeterMatrix& m, GeneratorSet j) {
  check_range(m, j);
  GeneratorSet out;
  (m.all() - j).for_each([&](Generator s) {
    bool commutes = true;
    j.for_each([&](Generator t) { commutes = commutes && m.m(s, t) == 2; });
    if (commutes) out.insert(s);
  });
  return out;
}

std::vector<GeneratorSet> irreducible_components(const CoxeterMatrix& m, GeneratorSet j) {
  check_range(m, j);
  return components_by(m, j, [&](Generator a, Generator b) { return m.linked(a, b); });
}

bool is_irreducible(const CoxeterMatrix& m, GeneratorSet t) {
  if (t.empty()) throw InvalidArgument("irreducibility is undefined for the empty set");
  return irreducible_components(m, t).size() == 1;
}

std::vector<GeneratorSet> odd_components(const CoxeterMatrix& m) {
  return components_by(m, m.all(), [&](Generator a, Generator b) { return m.odd_adjacent(a, b); });
}

GeneratorSet odd_component_of(const CoxeterMatrix& m, Generator s) {
  for (GeneratorSet c : odd_components(m)) {
    if (c.contains(s)) return c;
  }
  throw InvalidArgument("generator out of range");
}

std::vector<GeneratorSet> graph_components(const CoxeterMatrix& m, GeneratorSet vertices) {
  check_range(m, vertices);
  return components_by(m, vertices, [&](Generator a, Generator b) { return m.adjacent(a, b); });
}

GeneratorSet neighbours(const CoxeterMatrix& m, GeneratorSet set) {
  check_range(m, set);
  GeneratorSet out;
  set.for_each([&](Generator a) {
    (m.all() - set).for_each([&](Generator b) {
      if (m.adjacent(a, b)) out.insert(b);
    });
  });
  return out;
}

std::optional<std::pair<Generator, Generator>> separates(const CoxeterMatrix& m, GeneratorSet d) {
  auto comps = graph_components(m, m.all() - d);
  if (comps.size() < 2) return std::nullopt;
  Generator u = comps[0].lowest();
  Generator w = (m.all() - d - comps[0]).lowest();
  return std::make_pair(u, w);
}

void for_each_irreducible_subset(const CoxeterMatrix& m,
                                 const std::function<bool(GeneratorSet)>& visit, std::size_t cap) {
  const std::size_t n = m.rank();
  if (n > cap) {
    throw CapExceeded("rank " + std::to_string(n) + " exceeds the subset enumeration cap " +
                      std::to_string(cap));
  }
  std::vector<GeneratorSet> linked(n);
  for (Generator i = 0; i < n; ++i) {
    for (Generator j = 0; j < n; ++j) {
      if (m.linked(i, j)) linked[i].insert(j);
    }
  }

  // Connected-subgraph enumeration: every connected set is produced once, from its
  // lowest member, by only adding vertices exclusive to the newest vertex.
  bool stop = false;
  std::function<void(GeneratorSet, GeneratorSet, GeneratorSet, Generator)> grow =
      [&](GeneratorSet sub, GeneratorSet closed, GeneratorSet ext, Generator root) {
        if (stop) return;
        if (!visit(sub)) {
          stop = true;
          return;
        }
        while (!ext.empty() && !stop) {
          Generator w = ext.lowest();
          ext.erase(w);
          GeneratorSet fresh = linked[w] - closed;
          GeneratorSet next_ext = ext;
          fresh.for_each([&](Generator u) {
            if (u > root) next_ext.insert(u);
          });
          grow(sub | GeneratorSet::single(w), closed | linked[w] | GeneratorSet::single(w),
               next_ext, root);
        }
      };

  for (Generator v = 0; v < n && !stop; ++v) {
    GeneratorSet ext;
    linked[v].for_each([&](Generator u) {
      if (u > v) ext.insert(u);
    });
    grow(GeneratorSet::single(v), linked[v] | GeneratorSet::single(v), ext, v);
  }
}

std::vector<GeneratorSet> enumerate_irreducible_subsets(const CoxeterMatrix& m, std::size_t cap) {
  std::vector<GeneratorSet> out;
  for_each_irreducible_subset(m, [&](GeneratorSet t) {
    out.push_back(t);
    return true;
  }, cap);
  return out;
}

}  // namespace coxbip
