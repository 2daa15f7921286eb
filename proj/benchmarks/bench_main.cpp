#include "thhcalc/models.hpp"
#include "thhcalc/presentation.hpp"
#include "thhcalc/scenarios.hpp"
#include "thhcalc/tor.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace thhcalc;

void BM_ThhzPipeline(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario("thhz", p));
}
BENCHMARK(BM_ThhzPipeline)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TorOracle(benchmark::State& state) {
  const PrimeField f(static_cast<std::uint32_t>(state.range(0)));
  const int cap = default_cap(f.p());
  const AlgebraSpec alg = models::cyclic_v(f);
  const ModuleSpec left = trivial_module(models::thh_ell(f));
  for (auto _ : state) benchmark::DoNotOptimize(tor_oracle(alg, left, ground_module(), cap));
}
BENCHMARK(BM_TorOracle)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ThetaHilbert(benchmark::State& state) {
  const PrimeField f(static_cast<std::uint32_t>(state.range(0)));
  const Presentation ku = models::thh_ku(f);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_pres(ku, default_cap(f.p())));
}
BENCHMARK(BM_ThetaHilbert)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_KuSpectralSequence(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario("thh-ku-ss", p));
}
BENCHMARK(BM_KuSpectralSequence)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
