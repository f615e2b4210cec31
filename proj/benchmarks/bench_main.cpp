#include <coxbip/ball.hpp>
#include <coxbip/catalog.hpp>
#include <coxbip/census.hpp>
#include <coxbip/criteria.hpp>
#include <coxbip/walls.hpp>
#include <coxbip/word_engine.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace coxbip;

namespace {

const char* const kFixtures[] = {"affine-A2", "triangle-444", "example-fig2"};

// Normal forms of random words, fresh engine each iteration so the cache starts empty.
void BM_NormalForms(benchmark::State& state) {
  const auto m = catalog_matrix(kFixtures[state.range(0)]);
  std::mt19937_64 rng(1);
  std::vector<Word> words(512);
  for (auto& w : words) {
    w.resize(24);
    for (auto& s : w) s = static_cast<Generator>(rng() % m.rank());
  }
  for (auto _ : state) {
    WordEngine e(m);
    for (const auto& w : words) benchmark::DoNotOptimize(e.from_word(w));
  }
  state.SetLabel(kFixtures[state.range(0)]);
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(words.size()));
}
BENCHMARK(BM_NormalForms)->DenseRange(0, 2);

void BM_BuildBall(benchmark::State& state) {
  const auto m = catalog_matrix("example-fig2");
  std::size_t size = 0;
  for (auto _ : state) {
    WordEngine e(m);
    size = build_ball(e, static_cast<std::size_t>(state.range(0))).size();
  }
  state.counters["vertices"] = static_cast<double>(size);
}
BENCHMARK(BM_BuildBall)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_PoleCensus(benchmark::State& state) {
  const auto m = catalog_matrix(kFixtures[state.range(0)]);
  WordEngine e(m);
  const auto r = require_reflection(e, e.generator(0));
  CensusOptions o;
  o.radius = 8;
  for (auto _ : state) benchmark::DoNotOptimize(pole_census(e, r, o));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_PoleCensus)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Verdict(benchmark::State& state) {
  const auto m = catalog_matrix("example-fig2");
  for (auto _ : state) benchmark::DoNotOptimize(bipolar_verdict(m, true));
}
BENCHMARK(BM_Verdict);

}  // namespace

BENCHMARK_MAIN();
