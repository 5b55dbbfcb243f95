// Serial reference vs OpenMP kernels at one megapixel.
//   ccdgf_bench --benchmark_filter=Gf

#include <benchmark/benchmark.h>

#include "ccdgf/ccdgf.hpp"

using namespace ccdgf;

namespace {

const Image& input() {
  static const Image x = synth::generate(synth::Kind::Noise, 1, 1000, 1000, 0.05)[1].image;
  return x;
}

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input().size()));
}

void BM_BoxSum(benchmark::State& state) {
  const WindowSpec w{static_cast<int>(state.range(1)), Boundary::Truncate};
  const Image& x = input();
  for (auto _ : state) benchmark::DoNotOptimize(box_sum(x, w, exec_of(state)));
  label(state);
}

void BM_BoxMean(benchmark::State& state) {
  const WindowSpec w{static_cast<int>(state.range(1)), Boundary::Truncate};
  const Image& x = input();
  for (auto _ : state) benchmark::DoNotOptimize(box_mean(x, w, exec_of(state)));
  label(state);
}

void BM_Gf(benchmark::State& state) {
  const WindowSpec w{static_cast<int>(state.range(1)), Boundary::Truncate};
  const Image& x = input();
  for (auto _ : state) benchmark::DoNotOptimize(gf(x, x, w, 0.1, exec_of(state)));
  label(state);
}

void BM_Tvgf(benchmark::State& state) {
  const WindowSpec w{static_cast<int>(state.range(0)), Boundary::Periodic};
  const Image& x = input();
  for (auto _ : state) benchmark::DoNotOptimize(tvgf(x, x, w, 0.01, 45.0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input().size()));
}

void radii(benchmark::internal::Benchmark* b) {
  for (int exec : {0, 1}) {
    for (int r : {2, 10, 20}) b->Args({exec, r});
  }
  b->ArgNames({"parallel", "r"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_BoxSum)->Apply(radii);
BENCHMARK(BM_BoxMean)->Apply(radii);
BENCHMARK(BM_Gf)->Apply(radii);
BENCHMARK(BM_Tvgf)->Arg(2)->Arg(10)->Arg(20)->ArgName("r")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
