#include <benchmark/benchmark.h>

#include "quadclass/discdata.hpp"
#include "quadclass/orders.hpp"
#include "quadclass/qform.hpp"
#include "quadclass/rayclass.hpp"

using namespace quadclass;

static void BM_ClassNumber(benchmark::State& state) {
  const Integer d = state.range(0);
  const Integer disc = (d + 1) * (d - 3);
  for (auto _ : state) benchmark::DoNotOptimize(class_number(disc));
}
BENCHMARK(BM_ClassNumber)->Arg(90)->Arg(500)->Arg(2000);

static void BM_ClassMonoid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(class_monoid_size(state.range(0)));
}
BENCHMARK(BM_ClassMonoid)->Arg(35)->Arg(467)->Arg(1999);

static void BM_FundamentalUnit(benchmark::State& state) {
  const Integer disc0 = disc_data(state.range(0)).delta0;
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_unit(disc0));
}
BENCHMARK(BM_FundamentalUnit)->Arg(47)->Arg(467)->Arg(1999);

static void BM_RayClassSize(benchmark::State& state) {
  const Integer d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ray_class_size(d, 1, 2, false));
}
BENCHMARK(BM_RayClassSize)->Arg(47)->Arg(467)->Arg(1999);

static void BM_DensityScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(density_scan(state.range(0)).count());
}
BENCHMARK(BM_DensityScan)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
