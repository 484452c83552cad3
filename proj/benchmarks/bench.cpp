#include <benchmark/benchmark.h>

#include <numbers>

#include "raysec/entire.hpp"
#include "raysec/multisection.hpp"
#include "raysec/rootfind.hpp"
#include "raysec/sampling.hpp"
#include "raysec/theta.hpp"

using namespace raysec;

namespace {

Polynomial sample(int degree) {
  return sample_conforming_polynomial(Region::sector(2 * std::numbers::pi / 3), degree, 11);
}

void BM_Multisect(benchmark::State& state) {
  const Polynomial p = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multisect(p, {3, 1}));
}
BENCHMARK(BM_Multisect)->Arg(9)->Arg(64)->Arg(512);

void BM_FindRoots(benchmark::State& state) {
  const Polynomial p = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindRoots)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_ThetaInverse(benchmark::State& state) {
  const Polynomial p = sample(static_cast<int>(state.range(0)));
  const ThetaContext ctx = ThetaContext::from_polynomial(p, 3);
  const double target = 0.5 * ctx.theta_upper();
  for (auto _ : state) benchmark::DoNotOptimize(theta_inverse(ctx, target));
}
BENCHMARK(BM_ThetaInverse)->Arg(9)->Arg(30);

void BM_BracketPositiveRoots(benchmark::State& state) {
  const Polynomial p = sample(12);
  const ThetaContext ctx = ThetaContext::from_polynomial(p, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_positive_roots(p, {3, 0}, ctx));
}
BENCHMARK(BM_BracketPositiveRoots);

void BM_SectionZerosInDisk(benchmark::State& state) {
  WeierstrassSpec spec{0, 1.0, 2.0, std::numbers::ln2, {{-1, 1}, {-1, -1}}};
  StabilizationOptions o;
  o.radius = 5.0;
  for (auto _ : state) benchmark::DoNotOptimize(section_zeros_in_disk(spec, {4, 0}, o));
}
BENCHMARK(BM_SectionZerosInDisk)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
