#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxbip/ball.hpp"
#include "coxbip/walls.hpp"
#include "coxbip/word_engine.hpp"

namespace coxbip {

struct CensusOptions {
  int k = 2;
  std::size_t radius = 8;
  int margin = 2;
  std::size_t max_vertices = kDefaultBallCap;
};

struct ComponentSummary {
  std::size_t vertex_count = 0;
  HalfInt max_wall_distance;
  bool touches_ball_boundary = false;
  bool essential = false;

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

/// Complement components at a single radius.
struct CensusRun {
  std::size_t radius = 0;
  std::vector<ComponentSummary> components;
  std::size_t essential_count = 0;

  friend bool operator==(const CensusRun&, const CensusRun&) = default;
};

/// Components of region \ N_k(H), where H is a wall or an intersection of walls,
/// taken at radius R (`outer`) and R - 2 (`inner`).
///
/// The region of radius R is every vertex within R of the finite group W_J whose
/// walls make up H, so it is symmetric under the reflections of W_J. A component
/// is essential when it holds a vertex at depth ≥ k + margin within R - 2 of W_J
/// (R - 4 for the inner run); depth is the distance to the farthest wall of H.
/// The estimate is only reported when both runs agree.
struct CensusReport {
  std::string subject;
  std::vector<std::string> walls;
  int k = 0;
  int margin = 0;
  CensusRun outer;
  CensusRun inner;
  bool stable = false;
  std::optional<std::size_t> pole_estimate;
  std::vector<std::string> notes;

  std::size_t essential_count() const { return outer.essential_count; }

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Census of the wall of r, computed on the conjugate generator's wall.
CensusReport pole_census(WordEngine& engine, const Reflection& r, const CensusOptions& options);

/// Census of ball \ ∩ N_k(W_t) over the reflections t of the finite parabolic
/// generated by the support of w. A w with non-standard minimal parabolic is
/// first conjugated to a standard one; the report notes the conjugator.
/// Throws InvalidArgument unless w is a non-trivial involution with spherical
/// minimal parabolic.
CensusReport involution_census(WordEngine& engine, Element w, const CensusOptions& options);

/// Census of the intersection of the k-neighbourhoods of every wall of the
/// finite standard parabolic W_J. Throws InvalidArgument if J is empty or infinite.
CensusReport parabolic_census(WordEngine& engine, GeneratorSet j, const CensusOptions& options);

struct DominationReport {
  std::size_t radius = 0;
  int k = 0;
  bool dominated_within_ball = false;
  HalfInt max_escape_distance;
  /// Vertices adjacent to t's wall that were inspected.
  std::size_t samples = 0;

  friend bool operator==(const DominationReport&, const DominationReport&) = default;
};

/// Largest distance to r's wall over vertices of the radius R-1 ball that are
/// adjacent to t's wall. Throws InvalidArgument when either wall misses the ball.
DominationReport domination_probe(WordEngine& engine, const Reflection& r, const Reflection& t, int k,
                                  std::size_t radius, std::size_t max_vertices = kDefaultBallCap);

/// Conjugates an involution down to one with minimal standard support:
/// w = y · x · y⁻¹ with `x` returned in `reduced` and `y` in `conjugator`.
struct InvolutionNormalisation {
  Element reduced;
  Element conjugator;
  GeneratorSet support;
};
InvolutionNormalisation normalise_involution(WordEngine& engine, Element w);

/// Reflections of the finite standard parabolic W_J, ordered by normal form.
std::vector<Reflection> parabolic_reflections(WordEngine& engine, GeneratorSet j);

}  // namespace coxbip
