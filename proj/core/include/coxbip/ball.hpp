#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxbip/walls.hpp"
#include "coxbip/word_engine.hpp"

namespace coxbip {

inline constexpr std::size_t kDefaultBallCap = 2'000'000;

/// All elements of length ≤ radius with the right-multiplication Cayley edges.
/// Vertices are stored by length; within a layer in discovery order.
struct Ball {
  static constexpr std::uint32_t kOutside = 0xffffffffU;

  std::size_t radius = 0;
  std::size_t rank = 0;
  std::vector<Element> vertices;
  /// layer_end[n] = number of vertices of length ≤ n, for n ≤ radius.
  std::vector<std::size_t> layer_end;
  /// right[i * rank + s] = index of vertices[i]·s, or kOutside.
  std::vector<std::uint32_t> right;
  /// BFS tree: vertices[i] = vertices[parent[i]] · parent_letter[i]; root is its own parent.
  std::vector<std::uint32_t> parent;
  std::vector<Generator> parent_letter;
  /// True when the group was exhausted before reaching the radius.
  bool closed = false;

  std::size_t size() const { return vertices.size(); }
  std::size_t count_within(std::size_t r) const {
    return r >= radius ? vertices.size() : layer_end[r];
  }
  std::size_t length_of(std::uint32_t i) const;
  std::optional<std::uint32_t> find(Element e) const;
  std::uint32_t neighbour(std::uint32_t i, Generator s) const { return right[i * rank + s]; }

 private:
  friend Ball build_ball(WordEngine&, std::size_t, std::size_t);
  std::unordered_map<std::uint32_t, std::uint32_t> index_;
};

/// Throws CapExceeded once more than max_vertices vertices would be needed.
Ball build_ball(WordEngine& engine, std::size_t radius, std::size_t max_vertices = kDefaultBallCap);

/// v⁻¹ x v for every vertex v, computed along the BFS tree.
std::vector<Element> ball_conjugates(WordEngine& engine, const Ball& ball, Element x);

/// Ball edges dual to the wall of r, each as (lower endpoint index, generator).
struct WallTrace {
  Reflection reflection;
  std::vector<std::pair<std::uint32_t, Generator>> edges;
};

/// Throws InvalidArgument when the wall misses the ball.
WallTrace wall_trace(WordEngine& engine, const Ball& ball, const Reflection& r);

/// Connected components of the sub-graph induced on vertices of length ≤ radius
/// with keep[i] set, skipping edge slots i * rank + s marked in `cut`. Each
/// component is sorted; components are ordered by their first vertex.
std::vector<std::vector<std::uint32_t>> induced_components(const Ball& ball, const std::vector<bool>& keep,
                                                           std::size_t radius, const std::vector<bool>& cut = {});

/// Components of { v : d(v, wall of r) > k } inside the ball.
std::vector<std::vector<std::uint32_t>> tubular_complement_components(WordEngine& engine, const Ball& ball,
                                                                      const Reflection& r, int k);

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::uint32_t find(std::uint32_t x);
  void unite(std::uint32_t a, std::uint32_t b);

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace coxbip
