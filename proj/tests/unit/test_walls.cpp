#include "doctest.h"

#include <coxbip/diagram.hpp>
#include <coxbip/spherical.hpp>
#include <coxbip/walls.hpp>

#include <random>

#include "../oracles/graph_ball.hpp"
#include "../support/fixtures.hpp"

using namespace coxbip;

TEST_CASE("half-integers") {
  CHECK(HalfInt::from_twice(3).to_string() == "3/2");
  CHECK(HalfInt::from_int(2).to_string() == "2");
  CHECK(HalfInt::from_twice(1) < HalfInt::from_int(1));
  CHECK(HalfInt::from_twice(5).value() == doctest::Approx(2.5));
}

TEST_CASE("wall_separates") {
  WordEngine d(fx::cat("dihedral-inf"));
  auto r = require_reflection(d, d.generator(0));
  CHECK(wall_separates(d, r, d.identity(), d.generator(0)));
  CHECK_FALSE(wall_separates(d, r, d.generator(1), d.generator(1)));

  // Edge-crossing oracle: u and v are separated iff every path between them in
  // the ball crosses an odd number of r-edges; on the line graph of D∞ the
  // geodesic is the only simple path.
  Element u = d.from_word(Word{1, 0});
  Element v = d.from_word(Word{1, 0, 1});
  auto ball = oracle::graph_ball(d, 6);
  auto cross = [&](Element a, Element b) {
    // Walk from a to b along the geodesic a·(a⁻¹b) letter by letter.
    int count = 0;
    Element x = a;
    for (Generator g : d.normal_form(d.product(d.inverse(a), b))) {
      Element y = d.right_multiply(x, g);
      Element dual = d.product(x, d.product(d.generator(g), d.inverse(x)));
      count += dual == r.element;
      x = y;
    }
    return count % 2 == 1;
  };
  CHECK(wall_separates(d, r, u, v) == cross(u, v));
  for (Element a : ball.vertices)
    for (Element b : ball.vertices) CHECK(wall_separates(d, r, a, b) == cross(a, b));
}

TEST_CASE("wall_distance examples") {
  WordEngine a2(fx::dihedral(3));
  auto s = require_reflection(a2, a2.generator(0));
  CHECK(wall_distance(a2, a2.identity(), s) == HalfInt::from_twice(1));
  CHECK(wall_distance(a2, a2.generator(0), s) == HalfInt::from_twice(1));
  CHECK(wall_distance(a2, a2.generator(1), s) == HalfInt::from_twice(3));
}

TEST_CASE("oracle: wall distance equals BFS distance to wall midpoints") {
  for (const char* name : {"affine-A2", "A3", "grid", "triangle-444"}) {
    WordEngine e(fx::cat(name));
    auto big = oracle::graph_ball(e, 8);
    auto depth = oracle::wall_depths(e, big);
    auto small = oracle::graph_ball(e, 3);
    for (const auto& r : oracle::walls_crossing(e, small, 2)) {
      for (Element v : small.vertices) {
        Element rp = e.conjugate(r.element, v);
        REQUIRE(depth.contains(rp.id));
        CHECK(wall_distance(e, v, r) == HalfInt::from_twice(2 * static_cast<long long>(depth.at(rp.id)) + 1));
      }
    }
  }
}

TEST_CASE("jtu examples") {
  auto fig2m = fx::cat("example-fig2");
  WordEngine fig2(fig2m);
  auto s1 = require_reflection(fig2, fig2.generator(0));
  JTU sets = jtu_sets(fig2, fig2.identity(), s1);
  CHECK(sets.t == GeneratorSet{0});
  CHECK(sets.j == GeneratorSet{0});
  CHECK(sets.u == GeneratorSet{2, 3, 4, 5});
  CHECK(sets.u == perp(fig2m, {0}));

  for (const auto& name : fx::fixture_names()) {
    WordEngine e(fx::cat(name));
    for (Generator g = 0; g < e.rank(); ++g) {
      JTU x = jtu_sets(e, e.identity(), require_reflection(e, e.generator(g)));
      CHECK(x.j == GeneratorSet{g});
      CHECK(x.t == GeneratorSet{g});
      CHECK(perp(e.matrix(), {g}).subset_of(x.u));
    }
  }
}

TEST_CASE("jtu against the distance-comparison definition") {
  auto m = fx::cat("affine-A2");
  WordEngine e(m);
  Element v = e.generator(1);
  auto r = require_reflection(e, e.generator(0));
  JTU x = jtu_sets(e, v, r);
  CHECK(x.j.subset_of(x.t));
  CHECK(perp(m, x.t).subset_of(x.u));
  CHECK(x.u.subset_of(x.t | perp(m, x.t)));
  // J: neighbours v·s strictly closer to the wall, or s = r seen from v.
  GeneratorSet j;
  for (Generator s = 0; s < 3; ++s) {
    bool closer = wall_distance(e, e.right_multiply(v, s), r) < wall_distance(e, v, r);
    if (closer || e.generator(s) == x.translated) j.insert(s);
  }
  CHECK(j == x.j);
}

TEST_CASE("property: J ⊆ T, T⊥ ⊆ U ⊆ T ∪ T⊥ and J ∪ (U ∩ T) spherical") {
  std::mt19937_64 rng(41);
  std::size_t samples = 0;
  for (const auto& name : fx::fixture_names()) {
    auto m = fx::cat(name);
    WordEngine e(m);
    auto ball = oracle::graph_ball(e, 4);
    auto walls = oracle::walls_crossing(e, ball, 3);
    for (int k = 0; k < 80; ++k) {
      Element v = ball.vertices[rng() % ball.vertices.size()];
      const auto& r = walls[rng() % walls.size()];
      JTU x = jtu_sets(e, v, r);
      const GeneratorSet tp = perp(m, x.t);
      CAPTURE(name);
      CHECK(x.j.subset_of(x.t));
      CHECK(tp.subset_of(x.u));
      CHECK(x.u.subset_of(x.t | tp));
      CHECK(is_spherical(m, x.j | (x.u & x.t)));
      CHECK(x.t == e.support(x.translated));
      CHECK(is_irreducible(m, x.t));
      ++samples;
    }
  }
  CHECK(samples >= 500);
}
