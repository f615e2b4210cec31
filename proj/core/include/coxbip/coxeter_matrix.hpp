#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxbip/generator_set.hpp"

namespace coxbip {

/// Entry m(i,j) of a Coxeter matrix. kInfinity encodes m = ∞.
using Label = std::uint32_t;
inline constexpr Label kInfinity = std::numeric_limits<Label>::max();

/// One explicit off-diagonal entry of an input document.
struct LabelEntry {
  Generator i = 0;
  Generator j = 0;
  Label m = 2;
};

/// Symmetric matrix with 1 on the diagonal and entries in {2, 3, ..., ∞} off it.
/// Immutable once constructed; every other module reads the group from here.
class CoxeterMatrix {
 public:
  /// Off-diagonal entries not listed in `entries` get `default_label`.
  /// Throws InvalidArgument on rank 0, rank > kMaxRank, out-of-range or diagonal
  /// entries, labels < 2, duplicates and conflicting (asymmetric) entries.
  CoxeterMatrix(std::size_t rank, Label default_label, const std::vector<LabelEntry>& entries,
                std::vector<std::string> names = {});

  std::size_t rank() const { return rank_; }
  Label m(Generator i, Generator j) const { return labels_[i * rank_ + j]; }

  /// Non-commuting: m(i,j) ≠ 2 (and i ≠ j).
  bool linked(Generator i, Generator j) const { return i != j && m(i, j) != 2; }
  /// Edge of the Coxeter graph: finite label, i ≠ j. Label 2 counts as an edge.
  bool adjacent(Generator i, Generator j) const { return i != j && m(i, j) != kInfinity; }
  /// Finite odd label.
  bool odd_adjacent(Generator i, Generator j) const {
    return adjacent(i, j) && m(i, j) % 2 == 1;
  }

  GeneratorSet all() const { return GeneratorSet::full(rank_); }

  const std::string& name(Generator g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Generator> find(std::string_view name) const;

  /// Label the document declared as default ("2" or "inf").
  Label default_label() const { return default_; }
  /// Off-diagonal pairs (i < j) whose label differs from the default.
  std::vector<LabelEntry> explicit_entries() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  Label default_ = 2;
  std::vector<Label> labels_;
  std::vector<std::string> names_;
};

/// Parse the JSON input document:
///   {"rank": 3, "default": "2" | "inf", "labels": [[0, 1, 3], [1, 2, "inf"]],
///    "names": ["a", "b", "c"], "description": "..."}
/// `names` and `description` are optional. Errors carry a byte offset or JSON pointer.
CoxeterMatrix parse_coxeter_input(std::string_view text);

/// Serialise back to the input grammar (explicit entries only, sorted).
std::string to_input_json(const CoxeterMatrix& m, int indent = 2);

std::string label_to_string(Label m);

/// "{s1,s3}" using the matrix's generator names.
std::string format_set(const CoxeterMatrix& m, GeneratorSet set);

}  // namespace coxbip
