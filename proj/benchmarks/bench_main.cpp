#include <benchmark/benchmark.h>

#include "kf/falg.hpp"
#include "kf/knots.hpp"
#include "kf/laurent.hpp"
#include "kf/simplify.hpp"

namespace {

void bm_torus_alexander(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(kf::torus_alexander(p, p + 1));
}
BENCHMARK(bm_torus_alexander)->Arg(10)->Arg(25);

void bm_cable_closed_form(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kf::cable_closed_form(5, 4, +1));
}
BENCHMARK(bm_cable_closed_form);

void bm_cable_class(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kf::cable_class(4, 3, +1));
}
BENCHMARK(bm_cable_class);

void bm_tensor_simplify(benchmark::State& state) {
  const kf::BifilteredComplex a =
      kf::staircase_from_steps(kf::torus_class(4, 5));
  const kf::BifilteredComplex b =
      kf::staircase_from_steps(kf::torus_class(3, 4));
  for (auto _ : state) {
    auto simplified = kf::simultaneous_simplify(kf::tensor(a, b));
    benchmark::DoNotOptimize(simplified);
  }
}
BENCHMARK(bm_tensor_simplify);

void bm_realize_difference(benchmark::State& state) {
  const kf::ClassExpr cls{{{1, {1, 3, 2}}, {-1, {1, 3}}}};
  for (auto _ : state) benchmark::DoNotOptimize(kf::realize(cls));
}
BENCHMARK(bm_realize_difference);

}  // namespace

BENCHMARK_MAIN();
