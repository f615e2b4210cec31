#pragma once

#include <string>
#include <vector>

#include "coxbip/coxeter_matrix.hpp"
#include "coxbip/generator_set.hpp"

namespace coxbip {

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2, NonSpherical };

/// Finite irreducible Coxeter type, or NonSpherical.
/// `parameter` is the rank for A/B/D and the dihedral label m for I2; 0 otherwise.
struct TypeLabel {
  Family family = Family::NonSpherical;
  Label parameter = 0;

  bool spherical() const { return family != Family::NonSpherical; }
  /// Order of the finite group; 0 for NonSpherical.
  unsigned long long order() const;
  std::string to_string() const;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Inverse of TypeLabel::to_string. Throws InvalidArgument.
TypeLabel parse_type_label(const std::string& text);

/// Matches the labelled diagram of an irreducible T against the finite types
/// A_n, B_n, D_n, E_6..8, F_4, H_3, H_4 and I_2(m).
/// Rank-2 components are A2 for m = 3 and I2(m) otherwise.
/// Throws InvalidArgument if T is empty or reducible.
TypeLabel classify_irreducible(const CoxeterMatrix& m, GeneratorSet t);

/// W_J finite. The empty set is spherical.
bool is_spherical(const CoxeterMatrix& m, GeneratorSet j);

/// Every pair in J has a finite label.
bool is_2_spherical(const CoxeterMatrix& m, GeneratorSet j);

/// Irreducible components of S that are spherical, ordered by lowest member.
std::vector<GeneratorSet> spherical_factors(const CoxeterMatrix& m);

}  // namespace coxbip
