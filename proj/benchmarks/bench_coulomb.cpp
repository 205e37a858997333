#include <benchmark/benchmark.h>

#include "coulomb/airy.hpp"
#include "coulomb/contour.hpp"
#include "coulomb/exactref.hpp"
#include "coulomb/wkb.hpp"

using coulomb::complex;

static void BM_AiryQuad(benchmark::State& state) {
  const complex z = std::polar(static_cast<double>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::airy::airy_quad(z));
}
BENCHMARK(BM_AiryQuad)->Arg(1)->Arg(5)->Arg(12);

static void BM_WkbReal(benchmark::State& state) {
  const coulomb::ComplexParams p{2.0, 10.0, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::wkb::wkb_quad(p));
}
BENCHMARK(BM_WkbReal)->Arg(5)->Arg(20)->Arg(50);

static void BM_WkbComplex(benchmark::State& state) {
  const coulomb::ComplexParams p{{2, 1}, {10, 1}, std::polar(static_cast<double>(state.range(0)), 0.785)};
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::wkb::wkb_quad(p));
}
BENCHMARK(BM_WkbComplex)->Arg(5)->Arg(20)->Arg(40);

static void BM_ExactQuad(benchmark::State& state) {
  const coulomb::ComplexParams p{2.0, 10.0, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::exact::exact_quad(p));
}
BENCHMARK(BM_ExactQuad)->Arg(5)->Arg(20)->Arg(80)->Unit(benchmark::kMicrosecond);

static void BM_ContourLoop(benchmark::State& state) {
  coulomb::contour::ContourPath loop;
  loop.points = {complex{10, -5}, complex{30, -5}, complex{30, 5}, complex{10, 5}, complex{10, -5}};
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::contour::continue_quad(2.0, 10.0, loop));
}
BENCHMARK(BM_ContourLoop)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
