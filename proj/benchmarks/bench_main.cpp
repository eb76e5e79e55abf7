#include <benchmark/benchmark.h>

#include <random>

#include "gorentest/detector.hpp"
#include "gorentest/presentation.hpp"

using namespace gorentest;

namespace {

FieldMatrix random_matrix(PrimeField f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.reduce(static_cast<std::int64_t>(rng() % f.characteristic())));
  return m;
}

AlgebraPtr square_zero_ring() {
  const PrimeField f(2);
  const std::vector<std::string> v{"x", "y"};
  RingPresentation pres{f, v, {}};
  for (const char* r : {"x^2", "x*y", "y^2"}) pres.relations.push_back(parse_poly(r, v, f));
  return FinLocalAlgebra::from_presentation(pres);
}

void BM_RankF2(benchmark::State& state) {
  const auto m = random_matrix(PrimeField(2), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankF2)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oNCubed);

void BM_RankF3(benchmark::State& state) {
  const auto m = random_matrix(PrimeField(3), static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankF3)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNCubed);

void BM_ResolutionOfE(benchmark::State& state) {
  const auto r = square_zero_ring();
  const auto e = FinModule::injective_hull(r);
  for (auto _ : state)
    benchmark::DoNotOptimize(minimal_resolution(e, static_cast<std::size_t>(state.range(0))).betti.size());
}
BENCHMARK(BM_ResolutionOfE)->DenseRange(3, 6);

void BM_BundleAndKTensor(benchmark::State& state) {
  const auto r = square_zero_ring();
  for (auto _ : state) {
    const Bundle b = build_bundle(r, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(k_tensor_dims(b).size());
  }
}
BENCHMARK(BM_BundleAndKTensor)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
