#include <benchmark/benchmark.h>

#include "domaincheck/convergence.hpp"
#include "domaincheck/corpus.hpp"
#include "domaincheck/kernels.hpp"

namespace dc = domaincheck;

namespace {

const dc::FinitePoset& sample_poset(std::int64_t which) {
  static const dc::FinitePoset posets[] = {dc::diamond(), dc::cube(), dc::chain(6), dc::truncate_example_one(5)};
  return posets[which];
}

template <auto Kernel>
void scott(benchmark::State& state) {
  const auto& p = sample_poset(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(p));
  state.SetLabel(p.name());
}

template <auto Kernel>
void way_below(benchmark::State& state) {
  const auto& p = sample_poset(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(p));
  state.SetLabel(p.name());
}

template <auto Kernel>
void glim(benchmark::State& state) {
  const auto& p = sample_poset(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(p, 3));
  state.SetLabel(p.name());
}

void derived_gi(benchmark::State& state) {
  const auto& p = sample_poset(state.range(0));
  const auto nets = dc::enumerate_net_class(p, {});
  const auto exec = state.range(1) == 0 ? dc::Exec::Serial : dc::Exec::Parallel;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dc::derive_convergence_topology(p, dc::ConvergenceMode::GI, nets, exec));
  }
  state.SetLabel(p.name() + (exec == dc::Exec::Serial ? "/serial" : "/omp"));
}

}  // namespace

BENCHMARK(scott<dc::kernels::scott_opens_serial>)->DenseRange(0, 3);
BENCHMARK(scott<dc::kernels::scott_opens_omp>)->DenseRange(0, 3);
BENCHMARK(way_below<dc::kernels::way_below_rows_serial>)->DenseRange(0, 3);
BENCHMARK(way_below<dc::kernels::way_below_rows_omp>)->DenseRange(0, 3);
BENCHMARK(glim<dc::kernels::glim_opens_serial>)->DenseRange(0, 1);
BENCHMARK(glim<dc::kernels::glim_opens_omp>)->DenseRange(0, 1);
BENCHMARK(derived_gi)->ArgsProduct({{0, 1}, {0, 1}});

BENCHMARK_MAIN();
