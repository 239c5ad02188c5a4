// Microbenchmarks: exact LP pieces, the parametric solver on the fixtures and
// projections of generated polyhedra.

#include "pplp/fixtures.hpp"
#include "pplp/fourier_motzkin.hpp"
#include "pplp/generator.hpp"
#include "pplp/parallel.hpp"
#include "pplp/projection.hpp"

#include <benchmark/benchmark.h>

using namespace pplp;

namespace {

Polyhedron generated(std::size_t m, std::size_t d, std::uint64_t seed) {
  InstanceSpec spec;
  spec.constraints = m;
  spec.variables = d;
  spec.density = d;
  spec.projected = 0;
  spec.seed = seed;
  return generate(spec).front();
}

void BM_SolveLpExample1(benchmark::State& state) {
  const auto inst = example1();
  const RationalVector c{1, 1, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(inst.lp, c));
}
BENCHMARK(BM_SolveLpExample1);

void BM_ExactLpExample1(benchmark::State& state) {
  const auto inst = example1();
  const RationalVector c{1, 1, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(exact_lp(inst.lp, c));
}
BENCHMARK(BM_ExactLpExample1);

void BM_Pyramid(benchmark::State& state) {
  const auto inst = pyramid(static_cast<std::size_t>(state.range(0)));
  const auto sch = state.range(1) ? Scheduler::dynamic_pool : Scheduler::fan_out_rounds;
  std::size_t regions = 0;
  const auto threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) regions = solve_parallel(inst.lp, inst.pobj, threads, sch).regions.size();
  state.counters["regions"] = static_cast<double>(regions);
}
BENCHMARK(BM_Pyramid)
    ->ArgNames({"k", "pool", "threads"})
    ->ArgsProduct({{6, 10}, {0, 1}, {1, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_Redundancy(benchmark::State& state) {
  InstanceSpec spec;
  spec.constraints = 24;
  spec.redundant = 8;
  spec.variables = 6;
  spec.density = 6;
  spec.projected = 0;
  const auto p = generate(spec).front();
  RedundancyOptions opts;
  opts.mode = state.range(0) ? RedundancyMode::parallel : RedundancyMode::sequential;
  opts.threads = 4;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_constraints(p.constraints, opts));
}
BENCHMARK(BM_Redundancy)->ArgName("parallel")->Arg(0)->Arg(1)
    ->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Project(benchmark::State& state) {
  const auto p = generated(static_cast<std::size_t>(state.range(0)), 6, 3);
  const std::vector<std::size_t> el{0, 1};
  ProjectOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  std::size_t regions = 0;
  for (auto _ : state) regions = project_detailed(p, el, opts).stats.regions;
  state.counters["regions"] = static_cast<double>(regions);
}
BENCHMARK(BM_Project)
    ->ArgNames({"m", "threads"})
    ->ArgsProduct({{10, 16}, {1, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_FourierMotzkin(benchmark::State& state) {
  const auto p = generated(static_cast<std::size_t>(state.range(0)), 6, 3);
  const std::vector<std::size_t> el{0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(fm_project(p, el));
}
BENCHMARK(BM_FourierMotzkin)->ArgName("m")->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
