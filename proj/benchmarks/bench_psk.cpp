#include <benchmark/benchmark.h>

#include "psk/characters.hpp"
#include "psk/kernel.hpp"
#include "psk/random.hpp"
#include "psk/rsk.hpp"
#include "psk/sampler_exact.hpp"
#include "psk/sampler_features.hpp"

using namespace psk;

namespace {

void BM_KernelEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const KernelParams params({0.5, 0.3, 0.2}, n);
  Rng rng(1);
  const Permutation g = random_uniform(n, rng), h = random_uniform(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_eval(params, g, h));
}
BENCHMARK(BM_KernelEval)->Arg(8)->Arg(64)->Arg(512);

void BM_GramFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const KernelParams params({0.5, 0.5}, n);
  const auto points = enumerate_group(n);
  for (auto _ : state) benchmark::DoNotOptimize(gram(params, points).values.data());
}
BENCHMARK(BM_GramFull)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_FactorizeSpectral(benchmark::State& state) {
  const auto g = gram(KernelParams({0.5, 0.5}, 5), enumerate_group(5));
  for (auto _ : state) benchmark::DoNotOptimize(factorize(g).root.data());
}
BENCHMARK(BM_FactorizeSpectral)->Unit(benchmark::kMillisecond);

void BM_RskShape(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Permutation g = random_uniform(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rsk_shape(g));
}
BENCHMARK(BM_RskShape)->Arg(10)->Arg(100)->Arg(1000);

void BM_CharacterUncached(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto shapes = partitions_of(n);
  const Partition& lambda = shapes[shapes.size() / 2];
  const Partition& mu = shapes[shapes.size() / 3];
  for (auto _ : state) benchmark::DoNotOptimize(character_uncached(lambda, mu));
}
BENCHMARK(BM_CharacterUncached)->Arg(8)->Arg(12)->Arg(16);

void BM_FeatureBasis(benchmark::State& state) {
  const KernelParams params({0.5, 0.3, 0.2}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_feature_basis(params, 100, 7).features.size());
}
BENCHMARK(BM_FeatureBasis)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
