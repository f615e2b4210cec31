#pragma once

#include <compare>
#include <string>

#include "coxbip/generator_set.hpp"
#include "coxbip/word_engine.hpp"

namespace coxbip {

/// Exact half-integer, stored doubled.
struct HalfInt {
  long long twice = 0;

  static HalfInt from_twice(long long t) { return HalfInt{t}; }
  static HalfInt from_int(long long n) { return HalfInt{2 * n}; }
  double value() const { return static_cast<double>(twice) / 2.0; }
  /// "3/2", "2", "0".
  std::string to_string() const;

  friend auto operator<=>(HalfInt, HalfInt) = default;
};

/// The wall of r separates u from v.
bool wall_separates(WordEngine& engine, const Reflection& r, Element u, Element v);

/// Distance from vertex v to the wall of r: ℓ(v⁻¹ r v) / 2.
HalfInt wall_distance(WordEngine& engine, Element v, const Reflection& r);

struct JTU {
  GeneratorSet j;
  GeneratorSet t;
  GeneratorSet u;
  /// v⁻¹ r v, the reflection seen from v.
  Element translated;
};

/// J, T, U of the pair (v, r), transported to the identity vertex.
JTU jtu_sets(WordEngine& engine, Element v, const Reflection& r);

/// Certifies `e` as a reflection or throws InvalidArgument naming it.
Reflection require_reflection(WordEngine& engine, Element e);

}  // namespace coxbip
