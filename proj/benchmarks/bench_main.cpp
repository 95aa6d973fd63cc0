#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "funtopo/bottleneck.hpp"
#include "funtopo/cover.hpp"
#include "funtopo/douglas.hpp"
#include "funtopo/gallery.hpp"
#include "funtopo/persistence.hpp"
#include "support/random_models.hpp"

using namespace funtopo;

namespace {

void BM_ReduceHawaiian(benchmark::State& state) {
  const auto k = hawaiian_complex({1, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(compute_persistence(k));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(k.size()));
}
BENCHMARK(BM_ReduceHawaiian)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_ReduceRandom(benchmark::State& state) {
  testing::Rng rng(5);
  const auto k = testing::random_complex(rng, static_cast<std::size_t>(state.range(0)), 4)
                     .filtration();
  for (auto _ : state) benchmark::DoNotOptimize(compute_persistence(k, PrimeField(3)));
}
BENCHMARK(BM_ReduceRandom)->Arg(40)->Arg(160);

void BM_Bottleneck(benchmark::State& state) {
  testing::Rng rng(9);
  testing::DiagramShape shape{static_cast<int>(state.range(0)), 0, 0.1, 0.0};
  const auto a = testing::random_diagram(rng, shape);
  const auto b = testing::random_diagram(rng, shape);
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck(a, b, 0));
}
BENCHMARK(BM_Bottleneck)->RangeMultiplier(4)->Range(8, 512);

void BM_Dowker(benchmark::State& state) {
  testing::Rng rng(17);
  auto cover = testing::random_cover(rng, 8, 12);
  while (cover.sets().size() < 8 || cover.ground().size() < 10) cover = testing::random_cover(rng, 8, 12);
  for (auto _ : state) benchmark::DoNotOptimize(dowker_check(cover));
}
BENCHMARK(BM_Dowker);

void BM_Douglas(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DouglasInput in;
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    in.curve.push_back({std::cos(t), std::sin(t), 0.3 * std::cos(3 * t)});
  }
  in.phi = identity_phi(n);
  in.quadrature_n = n;
  for (auto _ : state) benchmark::DoNotOptimize(douglas_eval(in));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Douglas)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

}  // namespace
BENCHMARK_MAIN();
