// Serial reference loop (jobs = 1) against the OpenMP workers.
#include "hamcert/casework.hpp"
#include "hamcert/concrete_runs.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace hamcert;

namespace {

void BM_RunProp(benchmark::State& state) {
  const auto prop = static_cast<PropId>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const CaseReport r = run_prop(prop, {jobs});
    benchmark::DoNotOptimize(r.results.data());
  }
  state.SetLabel(std::string(to_string(prop)) + (jobs == 1 ? " serial" : " omp"));
}

void BM_E2E(benchmark::State& state) {
  static const CaseReport r = run_prop(PropId::P7_4, {1});
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const E2EReport e = run_e2e(r, {{7, 11}, {11, 13}}, 50, jobs);
    benchmark::DoNotOptimize(e.samples.data());
  }
  state.SetLabel(jobs == 1 ? "serial" : "omp");
}

void prop_args(benchmark::internal::Benchmark* b) {
  const int workers = std::max(2, omp_get_max_threads());
  for (PropId p : {PropId::P5_1, PropId::P7_4, PropId::P7_7, PropId::P7_9})
    for (int jobs : {1, workers}) b->Args({static_cast<long>(p), jobs});
}

void e2e_args(benchmark::internal::Benchmark* b) {
  for (int jobs : {1, std::max(2, omp_get_max_threads())}) b->Arg(jobs);
}

}  // namespace

BENCHMARK(BM_RunProp)->Apply(prop_args)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_E2E)->Apply(e2e_args)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
