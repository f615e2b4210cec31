#include "coxbip/criteria.hpp"

#include <functional>

#include "coxbip/error.hpp"
#include "coxbip/spherical.hpp"

namespace coxbip {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::None: return "none";
    case Condition::A: return "a";
    case Condition::B: return "b";
    case Condition::C: return "c";
  }
  return "none";
}

Condition condition_from_string(const std::string& s) {
  if (s == "none") return Condition::None;
  if (s == "a") return Condition::A;
  if (s == "b") return Condition::B;
  if (s == "c") return Condition::C;
  throw InvalidArgument("unknown condition '" + s + "'");
}

namespace {

// Visits non-empty spherical subsets of T. Sphericity is closed under subsets, so
// a branch is abandoned as soon as it stops being spherical.
bool for_each_spherical_subset(const CoxeterMatrix& m, GeneratorSet t,
                               const std::function<bool(GeneratorSet)>& visit) {
  std::vector<Generator> members = t.members();
  std::function<bool(GeneratorSet, std::size_t)> grow = [&](GeneratorSet i, std::size_t from) {
    for (std::size_t k = from; k < members.size(); ++k) {
      GeneratorSet next = i | GeneratorSet::single(members[k]);
      if (!is_spherical(m, next)) continue;
      if (!visit(next)) return false;
      if (!grow(next, k + 1)) return false;
    }
    return true;
  };
  return grow(GeneratorSet{}, 0);
}

std::optional<Witness> b_witness_for(const CoxeterMatrix& m, GeneratorSet t, GeneratorSet i) {
  auto pair = separates(m, i | perp(m, t));
  if (!pair) return std::nullopt;
  Witness w;
  w.t = t;
  w.i = i;
  w.separated_pair = pair;
  return w;
}

// Odd components inside T⊥ none of whose members touches S \ (T ∪ T⊥).
std::vector<Witness> c_witnesses_for(const CoxeterMatrix& m, GeneratorSet t) {
  std::vector<Witness> out;
  const GeneratorSet tp = perp(m, t);
  const GeneratorSet outside = GeneratorSet::full(m.rank()) - (t | tp);
  for (GeneratorSet o : odd_components(m)) {
    if (!o.subset_of(tp)) continue;
    if (neighbours(m, o).intersects(outside)) continue;
    Witness w;
    w.t = t;
    w.o = o;
    if (!outside.empty()) w.missing_adjacency = std::make_pair(o.lowest(), outside.lowest());
    out.push_back(w);
  }
  return out;
}

// Drives the (b) search; the visitor returns false to stop.
void scan_b(const CoxeterMatrix& m, std::size_t cap, const std::function<bool(const Witness&)>& visit) {
  for_each_irreducible_subset(m, [&](GeneratorSet t) {
    return for_each_spherical_subset(m, t, [&](GeneratorSet i) {
      auto w = b_witness_for(m, t, i);
      return !w || visit(*w);
    });
  }, cap);
}

void scan_c(const CoxeterMatrix& m, std::size_t cap, const std::function<bool(const Witness&)>& visit) {
  for_each_irreducible_subset(m, [&](GeneratorSet t) {
    if (!is_spherical(m, t)) return true;
    for (const Witness& w : c_witnesses_for(m, t)) {
      if (!visit(w)) return false;
    }
    return true;
  }, cap);
}

// T coincides with an irreducible component of S that is spherical.
bool is_spherical_component(const CoxeterMatrix& m, GeneratorSet t) {
  for (GeneratorSet c : spherical_factors(m)) {
    if (c == t) return true;
  }
  return false;
}

}  // namespace

std::vector<Witness> all_condition_a(const CoxeterMatrix& m) {
  std::vector<Witness> out;
  for (GeneratorSet c : spherical_factors(m)) out.push_back(Witness{c, {}, {}, {}, {}});
  return out;
}

std::vector<Witness> all_condition_b(const CoxeterMatrix& m, std::size_t cap) {
  std::vector<Witness> out;
  scan_b(m, cap, [&](const Witness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Witness> all_condition_c(const CoxeterMatrix& m, std::size_t cap) {
  std::vector<Witness> out;
  scan_c(m, cap, [&](const Witness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

ConditionResult condition_a(const CoxeterMatrix& m) {
  auto factors = spherical_factors(m);
  if (factors.empty()) return std::nullopt;
  return Witness{factors.front(), {}, {}, {}, {}};
}

ConditionResult condition_b(const CoxeterMatrix& m, std::size_t cap) {
  ConditionResult found;
  scan_b(m, cap, [&](const Witness& w) {
    found = w;
    return false;
  });
  return found;
}

ConditionResult condition_c(const CoxeterMatrix& m, std::size_t cap) {
  ConditionResult found;
  scan_c(m, cap, [&](const Witness& w) {
    found = w;
    return false;
  });
  return found;
}

Verdict bipolar_verdict(const CoxeterMatrix& m, bool collect_all, std::size_t cap) {
  Verdict v;
  if (collect_all) {
    for (auto& w : all_condition_a(m)) v.all_failures.push_back({Condition::A, w});
    for (auto& w : all_condition_b(m, cap)) v.all_failures.push_back({Condition::B, w});
    for (auto& w : all_condition_c(m, cap)) v.all_failures.push_back({Condition::C, w});
    if (!v.all_failures.empty()) {
      v.bipolar = false;
      v.failed_condition = v.all_failures.front().condition;
      v.witness = v.all_failures.front().witness;
    }
    return v;
  }
  const std::pair<Condition, std::function<ConditionResult()>> checks[] = {
      {Condition::A, [&] { return condition_a(m); }},
      {Condition::B, [&] { return condition_b(m, cap); }},
      {Condition::C, [&] { return condition_c(m, cap); }},
  };
  for (const auto& [cond, check] : checks) {
    if (auto w = check()) {
      v.bipolar = false;
      v.failed_condition = cond;
      v.witness = *w;
      return v;
    }
  }
  return v;
}

VertexCheck nearly_bipolar_conditions(WordEngine& engine, Element v, const Reflection& r) {
  const CoxeterMatrix& m = engine.matrix();
  VertexCheck out;
  out.sets = jtu_sets(engine, v, r);
  const GeneratorSet t = out.sets.t;
  if (is_spherical_component(m, t)) {
    out.passed = false;
    out.failed_condition = Condition::A;
    out.witness = Witness{t, {}, {}, {}, {}};
    return out;
  }
  if (auto pair = separates(m, out.sets.j | out.sets.u)) {
    out.passed = false;
    out.failed_condition = Condition::B;
    Witness w;
    w.t = t;
    w.i = out.sets.j;
    w.separated_pair = pair;
    out.witness = w;
  }
  return out;
}

VertexCheck bipolar_vertex_conditions(WordEngine& engine, Element v, const Reflection& r) {
  const CoxeterMatrix& m = engine.matrix();
  VertexCheck out;
  out.sets = jtu_sets(engine, v, r);
  const GeneratorSet t = out.sets.t;
  auto fail = [&](Condition c, Witness w) {
    out.passed = false;
    out.failed_condition = c;
    out.witness = std::move(w);
  };
  if (is_spherical_component(m, t)) {
    fail(Condition::A, Witness{t, {}, {}, {}, {}});
    return out;
  }
  std::optional<Witness> b;
  for_each_spherical_subset(m, t, [&](GeneratorSet i) {
    b = b_witness_for(m, t, i);
    return !b;
  });
  if (b) {
    fail(Condition::B, *b);
    return out;
  }
  if (is_spherical(m, t)) {
    auto cs = c_witnesses_for(m, t);
    if (!cs.empty()) fail(Condition::C, cs.front());
  }
  return out;
}

bool corollary_2sph_check(const CoxeterMatrix& m) {
  const GeneratorSet s = GeneratorSet::full(m.rank());
  return is_irreducible(m, s) && is_2_spherical(m, s) && !is_spherical(m, s);
}

bool witness_holds(const CoxeterMatrix& m, Condition c, const Witness& w) {
  const GeneratorSet all = GeneratorSet::full(m.rank());
  if (w.t.empty() || !w.t.subset_of(all)) return false;
  switch (c) {
    case Condition::None:
      return false;
    case Condition::A: {
      auto comps = irreducible_components(m, all);
      bool is_component = false;
      for (GeneratorSet comp : comps) is_component = is_component || comp == w.t;
      return is_component && is_spherical(m, w.t);
    }
    case Condition::B: {
      if (!w.i || !w.separated_pair) return false;
      if (!is_irreducible(m, w.t) || w.i->empty() || !w.i->subset_of(w.t) || !is_spherical(m, *w.i)) {
        return false;
      }
      const GeneratorSet removed = *w.i | perp(m, w.t);
      auto [x, y] = *w.separated_pair;
      if (removed.contains(x) || removed.contains(y) || x == y) return false;
      for (GeneratorSet comp : graph_components(m, all - removed)) {
        if (comp.contains(x)) return !comp.contains(y);
      }
      return false;
    }
    case Condition::C: {
      if (!w.o) return false;
      if (!is_irreducible(m, w.t) || !is_spherical(m, w.t)) return false;
      const GeneratorSet tp = perp(m, w.t);
      if (w.o->empty() || !w.o->subset_of(tp)) return false;
      bool is_odd_component = false;
      for (GeneratorSet o : odd_components(m)) is_odd_component = is_odd_component || o == *w.o;
      if (!is_odd_component) return false;
      const GeneratorSet outside = all - (w.t | tp);
      bool touches = false;
      w.o->for_each([&](Generator a) {
        outside.for_each([&](Generator b) { touches = touches || m.adjacent(a, b); });
      });
      return !touches;
    }
  }
  return false;
}

}  // namespace coxbip
