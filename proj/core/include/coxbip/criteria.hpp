#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxbip/coxeter_matrix.hpp"
#include "coxbip/diagram.hpp"
#include "coxbip/generator_set.hpp"
#include "coxbip/walls.hpp"
#include "coxbip/word_engine.hpp"

namespace coxbip {

enum class Condition { None, A, B, C };

std::string to_string(Condition c);
Condition condition_from_string(const std::string& s);

/// Evidence for a failed condition. Which optional fields are set depends on the
/// condition: (a) only T; (b) T, I and separated_pair; (c) T, O and, when
/// S \ (T ∪ T⊥) is non-empty, missing_adjacency = (min O, min S \ (T ∪ T⊥)).
struct Witness {
  GeneratorSet t;
  std::optional<GeneratorSet> i;
  std::optional<GeneratorSet> o;
  std::optional<std::pair<Generator, Generator>> separated_pair;
  std::optional<std::pair<Generator, Generator>> missing_adjacency;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Failure {
  Condition condition = Condition::None;
  Witness witness;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Verdict {
  bool bipolar = true;
  Condition failed_condition = Condition::None;
  std::optional<Witness> witness;
  /// Filled only when every failure was requested; first-failure order a, b, c.
  std::vector<Failure> all_failures;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Result of one condition: nullopt means it passes.
using ConditionResult = std::optional<Witness>;

ConditionResult condition_a(const CoxeterMatrix& m);
ConditionResult condition_b(const CoxeterMatrix& m, std::size_t cap = kDefaultEnumerationCap);
ConditionResult condition_c(const CoxeterMatrix& m, std::size_t cap = kDefaultEnumerationCap);

/// Every witness of each condition, in enumeration order.
std::vector<Witness> all_condition_a(const CoxeterMatrix& m);
std::vector<Witness> all_condition_b(const CoxeterMatrix& m, std::size_t cap = kDefaultEnumerationCap);
std::vector<Witness> all_condition_c(const CoxeterMatrix& m, std::size_t cap = kDefaultEnumerationCap);

/// Group-level decision from the diagram of (W, S).
Verdict bipolar_verdict(const CoxeterMatrix& m, bool collect_all = false,
                        std::size_t cap = kDefaultEnumerationCap);

/// Per-vertex outcome for a wall and a base vertex.
struct VertexCheck {
  bool passed = true;
  Condition failed_condition = Condition::None;
  std::optional<Witness> witness;
  JTU sets;
};

/// (a) T_{v,r} is not a spherical irreducible component of S;
/// (b) J_{v,r} ∪ U_{v,r} does not separate the diagram.
VertexCheck nearly_bipolar_conditions(WordEngine& engine, Element v, const Reflection& r);

/// (a), (b), (c) of the group criterion specialised to T = T_{v,r}.
VertexCheck bipolar_vertex_conditions(WordEngine& engine, Element v, const Reflection& r);

/// W irreducible, 2-spherical and infinite.
bool corollary_2sph_check(const CoxeterMatrix& m);

/// Re-derives a witness from scratch; true iff it really certifies the failure.
bool witness_holds(const CoxeterMatrix& m, Condition c, const Witness& w);

}  // namespace coxbip
