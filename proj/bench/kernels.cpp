// Serial vs OpenMP versions of the Jacobi, bracket-preservation and closure kernels.

#include <benchmark/benchmark.h>

#include "klein/kernels.hpp"
#include "klein/recipe.hpp"
#include "klein/subalg.hpp"

using namespace klein;

namespace {

const std::string kFamily[] = {"g2", "f4", "e6", "e7", "e8"};

template <bool Parallel>
void BM_Jacobi(benchmark::State& state) {
  auto g = algebra_for(kFamily[state.range(0)]);
  auto triples = sampled_triples(g->dim(), 2000, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? jacobi_failures_parallel(*g, triples) : jacobi_failures_serial(*g, triples));
  state.SetLabel(g->name());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(triples.size()));
}

template <bool Parallel>
void BM_Bracket(benchmark::State& state) {
  const std::string fam = kFamily[state.range(0)];
  auto g = algebra_for(fam);
  auto theta = build_recipe(*g, fam, "exp(H1)");
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? bracket_violations_parallel(*g, theta) : bracket_violations_serial(*g, theta));
  state.SetLabel(g->name());
}

template <bool Parallel>
void BM_Closure(benchmark::State& state) {
  const std::string fam = kFamily[state.range(0)];
  auto g = algebra_for(fam);
  auto k = fixed_subalgebra<Rational>(*g, {build_recipe(*g, fam, "exp(H1)")});
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? closure_violations_parallel(k) : closure_violations_serial(k));
  state.SetLabel(g->name() + " fixed by exp(H1), dim " + std::to_string(k.dim()));
}

}  // namespace

BENCHMARK(BM_Jacobi<false>)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Jacobi<true>)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Bracket<false>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bracket<true>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Closure<false>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Closure<true>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
