// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expectations below are written out here rather than read from the catalog so
// that a bad fixture file cannot make its own check pass.

#include <coxbip/ball.hpp>
#include <coxbip/census.hpp>
#include <coxbip/criteria.hpp>
#include <coxbip/diagram.hpp>
#include <coxbip/spherical.hpp>
#include <coxbip/walls.hpp>
#include <coxbip/word_engine.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/graph_ball.hpp"
#include "../support/fixtures.hpp"

using namespace coxbip;

namespace {

// Pinned tolerances and sample sizes.
constexpr double kFixtureSeconds = 60.0;
constexpr int kCensusK = 2;
constexpr std::size_t kCensusRadius = 8;
constexpr int kCensusMargin = 2;
constexpr std::size_t kPolesExpected = 2;
constexpr std::size_t kRandomWords = 1000;
constexpr std::size_t kBraidPairs = 200;
constexpr std::size_t kReflectionBall = 5;
constexpr std::size_t kDistanceVertices = 5;
constexpr std::size_t kDistanceWalls = 4;
constexpr std::size_t kDistanceOracle = 9;  // 5 + 4: reaches every v⁻¹rv midpoint
constexpr std::size_t kJtuSamples = 500;
constexpr std::size_t kCentraliserSamples = 200;
constexpr std::size_t kTwoSphericalMatrices = 50;
constexpr std::size_t kVertexBall = 4;
constexpr std::size_t kVertexWalls = 3;
constexpr long long kEscapeTolerance = 0;  // in half-units: escape must not grow from R = 6 to R = 8

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (ok) detail.str("");
    if (!ok) detail << "; ";
    ok = false;
    detail << why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Reflection gen(WordEngine& e, Generator s) { return require_reflection(e, e.generator(s)); }

void criterion_1(Outcome& out) {
  const std::map<std::string, Condition> expected = {
      {"finite-A2", Condition::A},    {"finite-B2", Condition::A},      {"A3", Condition::A},
      {"dihedral-inf", Condition::None}, {"affine-A2", Condition::None}, {"triangle-444", Condition::None},
      {"free-product-3", Condition::B}, {"grid", Condition::None},      {"A1xDinf", Condition::A},
      {"example-fig2", Condition::C}};
  double slowest = 0;
  std::size_t censuses = 0;
  for (const auto& [name, cond] : expected) {
    auto t0 = std::chrono::steady_clock::now();
    auto m = fx::cat(name.c_str());
    Verdict v = bipolar_verdict(m);
    if (v.bipolar != (cond == Condition::None) || v.failed_condition != cond) {
      out.fail(name + ": verdict " + (v.bipolar ? "bipolar" : "condition " + to_string(v.failed_condition)));
    }
    if (v.bipolar) {
      WordEngine e(m);
      for (Generator s = 0; s < m.rank(); ++s) {
        CensusOptions o;
        o.k = kCensusK;
        o.radius = kCensusRadius;
        o.margin = kCensusMargin;
        auto c = pole_census(e, gen(e, s), o);
        ++censuses;
        if (!c.stable || c.essential_count() != kPolesExpected) {
          out.fail(name + " " + m.name(s) + ": " + std::to_string(c.essential_count()) + " essential, " +
                   (c.stable ? "stable" : "unstable"));
        }
      }
    }
    double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    if (dt > kFixtureSeconds) out.fail(name + " took " + std::to_string(dt) + " s");
  }
  if (out.ok) out.detail << "10 verdicts; " << censuses << " censuses stable at 2; slowest fixture " << slowest << " s";
}

void criterion_2(Outcome& out) {
  auto m = fx::cat("example-fig2");
  WordEngine e(m);
  // (i)
  Verdict v = bipolar_verdict(m);
  if (v.bipolar || v.failed_condition != Condition::C || !v.witness || v.witness->t != GeneratorSet{0} ||
      v.witness->o != GeneratorSet{5}) {
    out.fail("(i) verdict/witness mismatch");
  } else if (!witness_holds(m, Condition::C, *v.witness)) {
    out.fail("(i) witness does not certify condition c");
  }
  // (ii)
  auto ball = oracle::graph_ball(e, kVertexBall);
  auto walls = oracle::walls_crossing(e, ball, kVertexWalls);
  std::size_t pairs = 0;
  for (Element x : ball.vertices) {
    for (const auto& r : walls) {
      ++pairs;
      if (!nearly_bipolar_conditions(e, x, r).passed) {
        out.fail("(ii) fails at v = " + e.format(x) + ", r = " + e.format(r.element));
        break;
      }
    }
  }
  // (iii)
  Element s1s6 = e.from_word(Word{0, 5});
  if (e.as_reflection(s1s6)) out.fail("(iii) s1 s6 classified as a reflection");
  // (iv)
  CensusOptions o;
  o.k = 2;
  o.radius = 8;
  auto inv = involution_census(e, s1s6, o);
  if (inv.essential_count() < 2) out.fail("(iv) involution census " + std::to_string(inv.essential_count()));
  // (v)
  auto d6 = domination_probe(e, gen(e, 0), gen(e, 5), 2, 6);
  auto d8 = domination_probe(e, gen(e, 0), gen(e, 5), 2, 8);
  if (d8.max_escape_distance.twice - d6.max_escape_distance.twice > kEscapeTolerance || !d6.dominated_within_ball ||
      !d8.dominated_within_ball) {
    out.fail("(v) escape " + d6.max_escape_distance.to_string() + " -> " + d8.max_escape_distance.to_string());
  }
  if (out.ok) {
    out.detail << "witness T={s1} O={s6}; " << pairs << " nearly-bipolar pairs; involution census "
               << inv.essential_count() << "; escape " << d6.max_escape_distance.to_string() << " at R=6 and "
               << d8.max_escape_distance.to_string() << " at R=8";
  }
}

// Applies one random braid move if the word has a site for it.
bool braid_move(const CoxeterMatrix& m, Word& w, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> sites;  // (position, length)
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    Generator a = w[p], b = w[p + 1];
    if (a == b) continue;
    Label l = m.m(a, b);
    if (l == kInfinity || p + l > w.size()) continue;
    bool alt = true;
    for (std::size_t k = 0; k < l && alt; ++k) alt = w[p + k] == (k % 2 ? b : a);
    if (alt) sites.emplace_back(p, l);
  }
  if (sites.empty()) return false;
  auto [p, l] = sites[rng() % sites.size()];
  Generator a = w[p], b = w[p + 1];
  for (std::size_t k = 0; k < l; ++k) w[p + k] = k % 2 ? a : b;
  return true;
}

void criterion_3(Outcome& out) {
  for (Label mm = 2; mm <= 6; ++mm) {
    WordEngine e(fx::dihedral(mm));
    Word w;
    for (Label k = 0; k < mm; ++k) w.insert(w.end(), {0, 1});
    if (shortlex(e, w) != e.identity() || !reduce(e, w).empty()) out.fail("(st)^" + std::to_string(mm) + " != e");
  }

  std::mt19937_64 rng(3);
  std::size_t words = 0;
  while (words < kRandomWords) {
    auto m = fx::random_matrix(rng, 4, {2, 3, 4, 5, 6, kInfinity});
    WordEngine e(m);
    for (int k = 0; k < 50; ++k, ++words) {
      Word w = fx::random_word(rng, 4, 16);
      Word ww = w;
      ww.insert(ww.end(), w.rbegin(), w.rend());
      if (shortlex(e, ww) != e.identity()) out.fail("w·reverse(w) != e for " + e.format_word(w));
    }
  }

  std::size_t braids = 0;
  while (braids < kBraidPairs) {
    auto m = fx::random_matrix(rng, 4, {2, 3, 4, kInfinity});
    WordEngine e(m);
    Word w = fx::random_word(rng, 4, 14);
    Word moved = w;
    bool any = false;
    for (int k = 0; k < 4; ++k) any |= braid_move(m, moved, rng);
    if (!any) continue;
    ++braids;
    Element a = e.from_word(w), b = e.from_word(moved);
    if (a != b || e.support(a) != e.support(b)) out.fail("braid pair disagrees: " + e.format_word(w));
  }

  std::size_t checked = 0;
  for (const char* name : {"dihedral-inf", "affine-A2", "A3"}) {
    WordEngine e(fx::cat(name));
    auto ball = oracle::graph_ball(e, kReflectionBall);
    // Reflections of length <= 5 are conjugates by elements of length <= 2; the
    // larger conjugator ball keeps the oracle comfortably complete.
    auto conj = oracle::conjugates_of_generators(e, oracle::graph_ball(e, kReflectionBall + 1));
    for (Element x : ball.vertices) {
      ++checked;
      if (e.as_reflection(x).has_value() != conj.contains(x.id)) {
        out.fail(std::string(name) + ": reflection test disagrees on " + e.format(x));
      }
    }
  }
  if (out.ok) {
    out.detail << "(st)^m for m=2..6; " << words << " palindromic words; " << braids << " braid pairs; " << checked
               << " reflection checks";
  }
}

void criterion_4(Outcome& out) {
  std::size_t checks = 0;
  for (const auto& name : fx::fixture_names()) {
    WordEngine e(fx::cat(name.c_str()));
    auto big = oracle::graph_ball(e, kDistanceOracle);
    auto depth = oracle::wall_depths(e, big);
    auto small = oracle::graph_ball(e, kDistanceVertices);
    auto walls = oracle::walls_crossing(e, small, kDistanceWalls);
    for (const auto& r : walls) {
      for (Element v : small.vertices) {
        ++checks;
        Element rp = e.conjugate(r.element, v);
        auto it = depth.find(rp.id);
        if (it == depth.end()) {
          out.fail(name + ": oracle ball misses " + e.format(rp));
          continue;
        }
        auto expect = HalfInt::from_twice(2 * static_cast<long long>(it->second) + 1);
        if (wall_distance(e, v, r) != expect) {
          out.fail(name + ": v = " + e.format(v) + ", r = " + e.format(r.element));
        }
      }
    }
  }
  if (out.ok) out.detail << checks << " (vertex, wall) pairs, exact";
}

void criterion_5(Outcome& out) {
  std::mt19937_64 rng(5);
  std::size_t jtu = 0;
  for (const auto& name : fx::fixture_names()) {
    auto m = fx::cat(name.c_str());
    WordEngine e(m);
    auto ball = oracle::graph_ball(e, 4);
    auto walls = oracle::walls_crossing(e, ball, 3);
    for (int k = 0; k < 60; ++k, ++jtu) {
      Element v = ball.vertices[rng() % ball.vertices.size()];
      const auto& r = walls[rng() % walls.size()];
      JTU x = jtu_sets(e, v, r);
      if (!is_spherical(m, x.j | (x.u & x.t))) out.fail(name + ": J ∪ (U∩T) not spherical at v = " + e.format(v));
    }
  }
  if (jtu < kJtuSamples) out.fail("only " + std::to_string(jtu) + " JTU samples");

  std::size_t central = 0;
  for (const auto& name : fx::fixture_names()) {
    auto m = fx::cat(name.c_str());
    WordEngine e(m);
    auto ball = build_ball(e, 6);
    for (Generator s = 0; s < m.rank(); ++s) {
      GeneratorSet o = odd_component_of(m, s);
      GeneratorSet closure = o | neighbours(m, o);
      Element g = e.generator(s);
      for (Element w : ball.vertices) {
        if (e.product(w, g) != e.product(g, w)) continue;
        ++central;
        if (!e.support(w).subset_of(closure)) out.fail(name + ": " + e.format(w) + " escapes the closure");
      }
    }
  }
  if (central < kCentraliserSamples) out.fail("only " + std::to_string(central) + " centraliser samples");

  std::size_t stable = 0;
  for (const auto& name : fx::fixture_names()) {
    auto m = fx::cat(name.c_str());
    if (!spherical_factors(m).empty()) continue;
    WordEngine e(m);
    for (Generator s = 0; s < m.rank(); ++s) {
      CensusOptions o;
      o.k = 1;
      o.radius = 7;
      auto c = pole_census(e, gen(e, s), o);
      if (!c.stable) continue;
      ++stable;
      if (*c.pole_estimate % 2 != 0) out.fail(name + " " + m.name(s) + ": odd count " + std::to_string(*c.pole_estimate));
    }
  }
  if (out.ok) {
    out.detail << jtu << " JTU samples; " << central << " centraliser samples; " << stable
               << " stable censuses, all even";
  }
}

void criterion_6(Outcome& out) {
  std::mt19937_64 rng(6);
  std::size_t made = 0, tried = 0;
  while (made < kTwoSphericalMatrices) {
    ++tried;
    std::size_t rank = 3 + rng() % 4;
    auto m = fx::random_matrix(rng, rank, {3, 4, 5});
    if (!is_irreducible(m, m.all()) || !is_2_spherical(m, m.all()) || is_spherical(m, m.all())) continue;
    ++made;
    if (!bipolar_verdict(m).bipolar) out.fail("non-bipolar verdict on " + to_input_json(m, -1));
  }
  if (out.ok) out.detail << made << " matrices (" << tried << " drawn), all bipolar";
}

void criterion_7(Outcome& out) {
  std::size_t pairs = 0;
  for (const auto& name : fx::fixture_names()) {
    auto m = fx::cat(name.c_str());
    WordEngine e(m);
    bool bipolar = bipolar_verdict(m).bipolar;
    auto ball = oracle::graph_ball(e, kVertexBall);
    auto walls = oracle::walls_crossing(e, ball, kVertexWalls);
    bool all_pass = true;
    for (Element v : ball.vertices) {
      for (const auto& r : walls) {
        ++pairs;
        auto strong = bipolar_vertex_conditions(e, v, r);
        all_pass &= strong.passed;
        if (strong.passed && !nearly_bipolar_conditions(e, v, r).passed) {
          out.fail(name + ": vertex conditions pass but nearly-bipolar fails at v = " + e.format(v));
        }
      }
    }
    if (all_pass != bipolar) out.fail(name + ": sampled all-pass = " + (all_pass ? "true" : "false"));
  }
  if (out.ok) out.detail << pairs << " (v, r) pairs over 10 fixtures";
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                                criterion_5, criterion_6, criterion_7};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i](out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    failures += !out.ok;
    std::printf("criterion %zu: %s (%.1f s) %s\n", i + 1, out.ok ? "PASS" : "FAIL", seconds_since(t0),
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
