#include <benchmark/benchmark.h>

#include "bnrsat/analysis.hpp"
#include "bnrsat/generator.hpp"
#include "bnrsat/reducer.hpp"
#include "bnrsat/search.hpp"

namespace {

bnrsat::GenConfig uniform3(std::uint64_t seed, bnrsat::Var n) {
  bnrsat::GenConfig cfg;
  cfg.seed = seed;
  cfg.n = n;
  cfg.m = static_cast<std::size_t>(4.26 * n);
  cfg.width_weights = {0, 0, 1, 0, 0};
  return cfg;
}

void BM_ReduceFixpoint(benchmark::State& state) {
  const bnrsat::Formula f = bnrsat::generate(uniform3(7, static_cast<bnrsat::Var>(state.range(0))));
  for (auto _ : state) {
    bnrsat::Formula g = f;
    bnrsat::Trail trail;
    bnrsat::reduce_fixpoint(g, trail);
    benchmark::DoNotOptimize(g.num_clauses());
  }
}
BENCHMARK(BM_ReduceFixpoint)->Arg(20)->Arg(50)->Arg(100);

void BM_Solve(benchmark::State& state) {
  const bnrsat::Formula f = bnrsat::generate(uniform3(11, static_cast<bnrsat::Var>(state.range(0))));
  bnrsat::SolverConfig cfg;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = bnrsat::solve(f, cfg);
    nodes = r.report.branching_nodes;
    benchmark::DoNotOptimize(r.verdict.status);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Solve)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Degree3Solve(benchmark::State& state) {
  bnrsat::GenConfig cfg;
  cfg.seed = 3;
  cfg.n = static_cast<bnrsat::Var>(state.range(0));
  cfg.mode = bnrsat::GenMode::Degree3Adversarial;
  const bnrsat::Formula f = bnrsat::generate(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(bnrsat::solve(f, {}).report.branching_nodes);
}
BENCHMARK(BM_Degree3Solve)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_BranchingFactor(benchmark::State& state) {
  const bnrsat::BranchingVector v{{4, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(bnrsat::branching_factor(v).factor);
}
BENCHMARK(BM_BranchingFactor);

}  // namespace

BENCHMARK_MAIN();
