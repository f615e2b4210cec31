#include "coxbip/census.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "coxbip/error.hpp"
#include "coxbip/spherical.hpp"

namespace coxbip {

namespace {

constexpr std::size_t kOrbitCap = 200'000;

// The census region is every vertex within `radius` of the centre W_J; distances
// come from a multi-source BFS inside a ball large enough to hold the region.
struct Region {
  Ball ball;
  std::vector<std::size_t> dist;  // distance to the centre, or kFar
  std::vector<long long> depth_twice;
  std::vector<bool> cut;  // edge slots dual to the wall when k = 0 and there is a single wall
};

constexpr std::size_t kFar = static_cast<std::size_t>(-1);

CensusRun run_at(const Region& g, std::size_t radius, const CensusOptions& o) {
  const Ball& ball = g.ball;
  CensusRun run;
  run.radius = radius;
  std::vector<bool> keep(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) keep[i] = g.dist[i] <= radius && g.depth_twice[i] > 2LL * o.k;
  DisjointSets sets(ball.size());
  for (std::uint32_t i = 0; i < ball.size(); ++i) {
    if (!keep[i]) continue;
    for (Generator s = 0; s < ball.rank; ++s) {
      const std::uint32_t j = ball.neighbour(i, s);
      if (j != Ball::kOutside && keep[j] && !(g.cut.size() && g.cut[i * ball.rank + s])) sets.unite(i, j);
    }
  }
  std::map<std::uint32_t, std::size_t> slot;
  const long long deep = 2LL * (o.k + o.margin);
  // Essentiality witnesses must sit in the radius - 2 interior of this run.
  const bool has_interior = radius >= 2;
  for (std::uint32_t i = 0; i < ball.size(); ++i) {
    if (!keep[i]) continue;
    auto [it, fresh] = slot.emplace(sets.find(i), run.components.size());
    if (fresh) run.components.emplace_back();
    ComponentSummary& c = run.components[it->second];
    ++c.vertex_count;
    c.max_wall_distance = std::max(c.max_wall_distance, HalfInt::from_twice(g.depth_twice[i]));
    if (g.dist[i] == radius) c.touches_ball_boundary = true;
    if (has_interior && g.dist[i] <= radius - 2 && g.depth_twice[i] >= deep) c.essential = true;
  }
  std::stable_sort(run.components.begin(), run.components.end(), [](const auto& a, const auto& b) {
    if (a.vertex_count != b.vertex_count) return a.vertex_count > b.vertex_count;
    return a.max_wall_distance > b.max_wall_distance;
  });
  for (const auto& c : run.components) run.essential_count += c.essential;
  return run;
}

void check_options(const CensusOptions& o) {
  if (o.k < 0) throw InvalidArgument("k must be non-negative");
  if (o.margin < 0) throw InvalidArgument("margin must be non-negative");
  if (o.radius < 2) throw InvalidArgument("census radius must be at least 2");
}

std::vector<Element> parabolic_elements(WordEngine& engine, GeneratorSet j) {
  std::vector<Element> group{engine.identity()};
  std::unordered_set<std::uint32_t> seen{engine.identity().id};
  for (std::size_t i = 0; i < group.size(); ++i) {
    j.for_each([&](Generator s) {
      Element z = engine.right_multiply(group[i], s);
      if (seen.insert(z.id).second) group.push_back(z);
    });
  }
  return group;
}

}  // namespace

CensusReport parabolic_census(WordEngine& engine, GeneratorSet j, const CensusOptions& o) {
  check_options(o);
  if (j.empty()) throw InvalidArgument("census needs at least one wall");
  const auto walls = parabolic_reflections(engine, j);
  const auto centre = parabolic_elements(engine, j);
  std::size_t reach = 0;
  for (Element g : centre) reach = std::max(reach, engine.length(g));

  Region g{build_ball(engine, o.radius + reach, o.max_vertices), {}, {}, {}};
  const Ball& ball = g.ball;
  g.dist.assign(ball.size(), kFar);
  std::deque<std::uint32_t> queue;
  for (Element c : centre) {
    const std::uint32_t i = *ball.find(c);
    g.dist[i] = 0;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const std::uint32_t i = queue.front();
    queue.pop_front();
    for (Generator s = 0; s < ball.rank; ++s) {
      const std::uint32_t n = ball.neighbour(i, s);
      if (n == Ball::kOutside || g.dist[n] != kFar) continue;
      g.dist[n] = g.dist[i] + 1;
      queue.push_back(n);
    }
  }

  CensusReport report;
  g.depth_twice.assign(ball.size(), 0);
  for (const Reflection& r : walls) {
    auto conj = ball_conjugates(engine, ball, r.element);
    for (std::size_t i = 0; i < ball.size(); ++i) {
      g.depth_twice[i] = std::max(g.depth_twice[i], static_cast<long long>(engine.length(conj[i])));
    }
    if (walls.size() == 1 && o.k == 0) {
      g.cut.assign(ball.size() * ball.rank, false);
      for (std::size_t i = 0; i < ball.size(); ++i) {
        if (engine.length(conj[i]) == 1) g.cut[i * ball.rank + engine.normal_form(conj[i]).front()] = true;
      }
    }
    report.walls.push_back(engine.format(r.element));
  }
  report.subject = format_set(engine.matrix(), j);
  report.k = o.k;
  report.margin = o.margin;
  report.outer = run_at(g, o.radius, o);
  report.inner = run_at(g, o.radius - 2, o);
  report.stable = report.outer.essential_count == report.inner.essential_count;
  if (report.stable) report.pole_estimate = report.outer.essential_count;
  if (ball.closed) report.notes.push_back("group exhausted before the ball radius");
  return report;
}

CensusReport pole_census(WordEngine& engine, const Reflection& r, const CensusOptions& o) {
  // Left translation by x⁻¹, where r = x·s·x⁻¹, carries the wall of r to that of s.
  CensusReport report = parabolic_census(engine, GeneratorSet{r.base}, o);
  report.subject = engine.format(r.element);
  report.walls = {report.subject};
  if (!r.descent_chain.empty()) {
    report.notes.push_back("translated by '" + engine.format(engine.from_word(r.descent_chain)) + "' to '" +
                           engine.format(engine.generator(r.base)) + "'");
  }
  return report;
}

InvolutionNormalisation normalise_involution(WordEngine& engine, Element w) {
  if (!engine.is_involution(w)) {
    throw InvalidArgument("'" + engine.format(w) + "' is not a non-trivial involution");
  }
  Element x = w;
  Element y = engine.identity();
  // Strict descents first; when none exists, search the length-preserving
  // conjugacy orbit for an element that admits one.
  for (;;) {
    bool moved = false;
    for (Generator s = 0; s < engine.rank() && !moved; ++s) {
      Element c = engine.conjugate_by(s, x);
      if (engine.length(c) < engine.length(x)) {
        x = c;
        y = engine.right_multiply(y, s);
        moved = true;
      }
    }
    if (moved) continue;
    std::deque<std::pair<Element, Element>> queue{{x, y}};
    std::unordered_set<std::uint32_t> seen{x.id};
    while (!queue.empty() && !moved) {
      auto [cur, conj] = queue.front();
      queue.pop_front();
      for (Generator s = 0; s < engine.rank() && !moved; ++s) {
        Element c = engine.conjugate_by(s, cur);
        if (engine.length(c) < engine.length(cur)) {
          x = c;
          y = engine.right_multiply(conj, s);
          moved = true;
        } else if (engine.length(c) == engine.length(cur) && seen.insert(c.id).second) {
          if (seen.size() > kOrbitCap) throw CapExceeded("conjugacy orbit search exceeded its cap");
          queue.emplace_back(c, engine.right_multiply(conj, s));
        }
      }
    }
    if (!moved) break;
  }
  return {x, y, engine.support(x)};
}

std::vector<Reflection> parabolic_reflections(WordEngine& engine, GeneratorSet j) {
  if (!is_spherical(engine.matrix(), j)) {
    throw InvalidArgument("parabolic " + format_set(engine.matrix(), j) + " is infinite");
  }
  const auto group = parabolic_elements(engine, j);
  std::set<std::uint32_t> found;
  std::vector<Reflection> out;
  for (Element g : group) {
    j.for_each([&](Generator s) {
      Element t = engine.conjugate(engine.generator(s), engine.inverse(g));
      if (found.insert(t.id).second) out.push_back(*engine.as_reflection(t));
    });
  }
  std::sort(out.begin(), out.end(), [&](const Reflection& a, const Reflection& b) {
    auto la = engine.length(a.element), lb = engine.length(b.element);
    if (la != lb) return la < lb;
    return engine.normal_form(a.element) < engine.normal_form(b.element);
  });
  return out;
}

CensusReport involution_census(WordEngine& engine, Element w, const CensusOptions& o) {
  InvolutionNormalisation n = normalise_involution(engine, w);
  if (!is_spherical(engine.matrix(), n.support)) {
    throw InvalidArgument("minimal parabolic of '" + engine.format(w) + "' is not spherical");
  }
  CensusReport report = parabolic_census(engine, n.support, o);
  report.subject = engine.format(w);
  if (n.conjugator != engine.identity()) {
    report.notes.push_back("conjugated by '" + engine.format(n.conjugator) + "' to '" + engine.format(n.reduced) +
                           "' with standard support " + format_set(engine.matrix(), n.support));
  }
  if (engine.as_reflection(w)) report.notes.push_back("subject is a reflection: single-wall census");
  return report;
}

DominationReport domination_probe(WordEngine& engine, const Reflection& r, const Reflection& t, int k,
                                  std::size_t radius, std::size_t max_vertices) {
  if (k < 0) throw InvalidArgument("k must be non-negative");
  if (radius < 1) throw InvalidArgument("domination radius must be at least 1");
  Ball ball = build_ball(engine, radius, max_vertices);
  wall_trace(engine, ball, r);
  wall_trace(engine, ball, t);
  auto cr = ball_conjugates(engine, ball, r.element);
  auto ct = ball_conjugates(engine, ball, t.element);
  DominationReport out;
  out.radius = radius;
  out.k = k;
  long long worst = 0;
  const std::size_t count = ball.count_within(radius - 1);
  for (std::size_t i = 0; i < count; ++i) {
    if (engine.length(ct[i]) != 1) continue;
    ++out.samples;
    worst = std::max(worst, static_cast<long long>(engine.length(cr[i])));
  }
  out.max_escape_distance = HalfInt::from_twice(worst);
  out.dominated_within_ball = worst <= 2LL * k;
  return out;
}

}  // namespace coxbip
