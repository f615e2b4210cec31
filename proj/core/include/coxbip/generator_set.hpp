#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace coxbip {

using Generator = std::uint32_t;

/// Maximum rank representable by GeneratorSet.
inline constexpr std::size_t kMaxRank = 64;

/// A subset of {0, ..., rank-1}, stored as a 64-bit mask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr GeneratorSet(std::initializer_list<Generator> gens) {
    for (Generator g : gens) bits_ |= bit(g);
  }

  static constexpr GeneratorSet from_bits(std::uint64_t bits) {
    GeneratorSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, ..., rank-1}.
  static constexpr GeneratorSet full(std::size_t rank) {
    return from_bits(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }
  static constexpr GeneratorSet single(Generator g) { return from_bits(bit(g)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Generator g) const { return g < 64 && (bits_ >> g) & 1U; }
  constexpr bool subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(GeneratorSet o) const { return (bits_ & o.bits_) != 0; }

  /// Smallest member; the set must be non-empty.
  constexpr Generator lowest() const { return static_cast<Generator>(std::countr_zero(bits_)); }

  constexpr void insert(Generator g) { bits_ |= bit(g); }
  constexpr void erase(Generator g) { bits_ &= ~bit(g); }

  std::vector<Generator> members() const {
    std::vector<Generator> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Generator>(std::countr_zero(b)));
    }
    return out;
  }

  /// Iterate members in increasing order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      fn(static_cast<Generator>(std::countr_zero(b)));
    }
  }

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr GeneratorSet operator-(GeneratorSet a, GeneratorSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  constexpr GeneratorSet& operator|=(GeneratorSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;
  /// Orders by mask value; used only to get deterministic containers.
  friend constexpr bool operator<(GeneratorSet a, GeneratorSet b) { return a.bits_ < b.bits_; }

 private:
  static constexpr std::uint64_t bit(Generator g) { return std::uint64_t{1} << g; }

  std::uint64_t bits_ = 0;
};

}  // namespace coxbip
