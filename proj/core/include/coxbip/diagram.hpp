#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "coxbip/coxeter_matrix.hpp"
#include "coxbip/generator_set.hpp"

namespace coxbip {

// Subset combinatorics of the Coxeter graph. Throughout, "adjacent" means the
// pair has a finite label (label 2 included) and "linked" means the pair does
// not commute. Every function throws InvalidArgument when a set mentions a
// generator outside the matrix.

/// Elements of S \ J commuting with every element of J.
GeneratorSet perp(const CoxeterMatrix& m, GeneratorSet j);

/// Blocks of J under the transitive closure of "does not commute".
/// Blocks are ordered by their lowest member.
std::vector<GeneratorSet> irreducible_components(const CoxeterMatrix& m, GeneratorSet j);

/// True iff T is non-empty and has exactly one irreducible component.
/// Throws InvalidArgument for empty T.
bool is_irreducible(const CoxeterMatrix& m, GeneratorSet t);

/// Connected components of S under edges with finite odd label.
std::vector<GeneratorSet> odd_components(const CoxeterMatrix& m);

/// The odd component containing s.
GeneratorSet odd_component_of(const CoxeterMatrix& m, Generator s);

/// Components of the Coxeter graph induced on `vertices`.
std::vector<GeneratorSet> graph_components(const CoxeterMatrix& m, GeneratorSet vertices);

/// Generators adjacent (finite label) to at least one member of `set`, excluding `set`.
GeneratorSet neighbours(const CoxeterMatrix& m, GeneratorSet set);

/// If removing D disconnects the Coxeter graph, returns the lowest pair of surviving
/// vertices lying in different components (first from the lowest component, second
/// the lowest vertex outside it).
std::optional<std::pair<Generator, Generator>> separates(const CoxeterMatrix& m, GeneratorSet d);

inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// Visits every non-empty irreducible subset of S exactly once, in a fixed order
/// (grouped by lowest member, grown along non-commuting pairs). Returning false from
/// the visitor stops the enumeration. Throws CapExceeded when rank > cap.
void for_each_irreducible_subset(const CoxeterMatrix& m,
                                 const std::function<bool(GeneratorSet)>& visit,
                                 std::size_t cap = kDefaultEnumerationCap);

std::vector<GeneratorSet> enumerate_irreducible_subsets(const CoxeterMatrix& m,
                                                        std::size_t cap = kDefaultEnumerationCap);

}  // namespace coxbip
