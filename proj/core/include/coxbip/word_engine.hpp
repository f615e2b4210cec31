#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxbip/coxeter_matrix.hpp"
#include "coxbip/generator_set.hpp"

namespace coxbip {

using Word = std::vector<Generator>;

/// Handle to a group element owned by a WordEngine. Two handles from the same
/// engine are equal iff they denote the same element of W.
struct Element {
  std::uint32_t id = 0;
  friend bool operator==(Element, Element) = default;
  friend bool operator<(Element a, Element b) { return a.id < b.id; }
};

/// A reflection with its certificate: conjugating `element` successively by the
/// letters of `descent_chain` (w <- s w s) ends at the generator `base`.
struct Reflection {
  Element element;
  Word descent_chain;
  Generator base = 0;
};

struct EngineLimits {
  /// Longest input word accepted by from_word / reduce.
  std::size_t max_word_length = 40;
  /// Memo table size at which CapExceeded is thrown.
  std::size_t max_elements = std::size_t{1} << 23;
};

/// Exact solution of the word problem in (W, S).
///
/// Elements live in a memo table keyed by their ShortLex normal form: an entry
/// stores its first letter (the least left descent) and the entry of the
/// remaining suffix, so normal forms form a trie. Left multiplication s·w is
/// resolved by the rank-2 exchange argument: if a and s are both left descents
/// of w then w = Δ_{a,s}·x with lengths adding, where Δ is the longest element of
/// the dihedral parabolic. Deciding "is s a left descent of w" therefore only
/// needs alternating descent walks through strictly shorter elements, and every
/// answer is cached. No arithmetic on roots is involved.
///
/// The engine grows its table on queries, so it is not safe for concurrent use
/// without external synchronisation. A frozen engine may be read concurrently
/// only through queries whose answers are already cached.
class WordEngine {
 public:
  explicit WordEngine(CoxeterMatrix matrix, EngineLimits limits = {});

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return rank_; }
  const EngineLimits& limits() const { return limits_; }
  std::size_t table_size() const { return nodes_.size(); }

  Element identity() const { return Element{0}; }
  Element generator(Generator s);
  /// Throws InvalidArgument on out-of-range letters, CapExceeded past max_word_length.
  Element from_word(std::span<const Generator> word);

  std::size_t length(Element e) const { return nodes_[e.id].length; }
  /// ShortLex-least reduced word (compared letter by letter from the left).
  Word normal_form(Element e) const;
  GeneratorSet left_descents(Element e) const { return GeneratorSet::from_bits(nodes_[e.id].descents); }
  GeneratorSet right_descents(Element e);

  Element left_multiply(Generator s, Element e);
  Element right_multiply(Element e, Generator s);
  Element product(Element a, Element b);
  Element inverse(Element e);
  /// s·e·s.
  Element conjugate_by(Generator s, Element e);
  /// x⁻¹·e·x.
  Element conjugate(Element e, Element x);

  /// Letters of the normal form; equal for every reduced word of the element.
  GeneratorSet support(Element e) const;

  /// Present iff e is conjugate to a generator.
  std::optional<Reflection> as_reflection(Element e);
  bool is_involution(Element e);

  /// Parses a whitespace- or '*'-separated word of generator names; "e" or "" is
  /// the identity. Throws InvalidArgument on unknown names.
  Word parse_word(std::string_view text) const;
  std::string format(Element e) const;
  std::string format_word(std::span<const Generator> word) const;

 private:
  struct Node {
    std::uint32_t tail;
    std::uint32_t inverse;
    std::uint32_t length;
    std::uint32_t first;
    std::uint64_t descents;
  };

  static constexpr std::uint32_t kUnknown = 0xffffffffU;

  std::uint32_t lmul(Generator s, std::uint32_t w);
  std::uint32_t descend(Generator s, std::uint32_t w);
  std::uint32_t ascend(Generator c, std::uint32_t y);
  std::uint32_t invert(std::uint32_t w);
  void check_generator(Generator s) const;

  CoxeterMatrix matrix_;
  std::size_t rank_;
  EngineLimits limits_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> links_;  // links_[id * rank + s] = id of s·element
};

/// Reduced word for `word`; its size is the length function ℓ.
Word reduce(WordEngine& engine, std::span<const Generator> word);

/// ShortLex normal form of `word` as an element.
Element shortlex(WordEngine& engine, std::span<const Generator> word);

}  // namespace coxbip
