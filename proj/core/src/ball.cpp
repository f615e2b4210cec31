#include "coxbip/ball.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coxbip/error.hpp"

namespace coxbip {

std::size_t Ball::length_of(std::uint32_t i) const {
  auto it = std::upper_bound(layer_end.begin(), layer_end.end(), static_cast<std::size_t>(i));
  return static_cast<std::size_t>(it - layer_end.begin());
}

std::optional<std::uint32_t> Ball::find(Element e) const {
  auto it = index_.find(e.id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Ball build_ball(WordEngine& engine, std::size_t radius, std::size_t max_vertices) {
  Ball b;
  b.radius = radius;
  b.rank = engine.rank();
  const std::size_t n = b.rank;
  b.vertices.push_back(engine.identity());
  b.parent.push_back(0);
  b.parent_letter.push_back(0);
  b.index_.emplace(engine.identity().id, 0);
  b.layer_end.push_back(1);

  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= radius; ++len) {
    const std::size_t layer_stop = b.vertices.size();
    for (std::size_t i = layer_begin; i < layer_stop; ++i) {
      for (Generator s = 0; s < n; ++s) {
        Element z = engine.right_multiply(b.vertices[i], s);
        if (engine.length(z) != len || b.index_.contains(z.id)) continue;
        if (b.vertices.size() >= max_vertices) {
          throw CapExceeded("ball of radius " + std::to_string(radius) + " exceeds " +
                            std::to_string(max_vertices) + " vertices");
        }
        b.index_.emplace(z.id, static_cast<std::uint32_t>(b.vertices.size()));
        b.vertices.push_back(z);
        b.parent.push_back(static_cast<std::uint32_t>(i));
        b.parent_letter.push_back(s);
      }
    }
    layer_begin = layer_stop;
    b.layer_end.push_back(b.vertices.size());
    if (layer_begin == b.vertices.size()) b.closed = true;
  }

  b.right.assign(b.vertices.size() * n, Ball::kOutside);
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    for (Generator s = 0; s < n; ++s) {
      if (b.right[i * n + s] != Ball::kOutside) continue;
      auto j = b.find(engine.right_multiply(b.vertices[i], s));
      if (!j) continue;
      b.right[i * n + s] = *j;
      b.right[*j * n + s] = static_cast<std::uint32_t>(i);
    }
  }
  return b;
}

std::vector<Element> ball_conjugates(WordEngine& engine, const Ball& ball, Element x) {
  std::vector<Element> out(ball.size());
  out[0] = x;
  for (std::size_t i = 1; i < ball.size(); ++i) {
    out[i] = engine.conjugate_by(ball.parent_letter[i], out[ball.parent[i]]);
  }
  return out;
}

WallTrace wall_trace(WordEngine& engine, const Ball& ball, const Reflection& r) {
  WallTrace trace{r, {}};
  auto conj = ball_conjugates(engine, ball, r.element);
  for (std::uint32_t i = 0; i < ball.size(); ++i) {
    if (engine.length(conj[i]) != 1) continue;
    const Generator s = engine.normal_form(conj[i]).front();
    const std::uint32_t j = ball.neighbour(i, s);
    if (j == Ball::kOutside) continue;
    if (engine.length(ball.vertices[j]) > engine.length(ball.vertices[i])) trace.edges.emplace_back(i, s);
  }
  if (trace.edges.empty()) {
    throw InvalidArgument("the wall of '" + engine.format(r.element) + "' does not cross the ball of radius " +
                          std::to_string(ball.radius));
  }
  return trace;
}

std::vector<std::vector<std::uint32_t>> induced_components(const Ball& ball, const std::vector<bool>& keep,
                                                           std::size_t radius, const std::vector<bool>& cut) {
  const std::size_t count = ball.count_within(radius);
  DisjointSets sets(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    if (!keep[i]) continue;
    for (Generator s = 0; s < ball.rank; ++s) {
      std::uint32_t j = ball.neighbour(i, s);
      if (j == Ball::kOutside || j >= count || !keep[j]) continue;
      if (!cut.empty() && cut[i * ball.rank + s]) continue;
      sets.unite(i, j);
    }
  }
  std::map<std::uint32_t, std::size_t> slot;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t i = 0; i < count; ++i) {
    if (!keep[i]) continue;
    auto [it, fresh] = slot.emplace(sets.find(i), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(i);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> tubular_complement_components(WordEngine& engine, const Ball& ball,
                                                                      const Reflection& r, int k) {
  if (k < 0) throw InvalidArgument("neighbourhood radius k must be non-negative");
  auto conj = ball_conjugates(engine, ball, r.element);
  std::vector<bool> keep(ball.size());
  std::vector<bool> cut(ball.size() * ball.rank, false);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    keep[i] = static_cast<long long>(engine.length(conj[i])) > 2LL * k;
    // Edges through the wall meet N_0, so they go even when both ends stay.
    if (engine.length(conj[i]) == 1) cut[i * ball.rank + engine.normal_form(conj[i]).front()] = true;
  }
  return induced_components(ball, keep, ball.radius, cut);
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0U);
}

std::uint32_t DisjointSets::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void DisjointSets::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
}

}  // namespace coxbip
