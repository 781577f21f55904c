// Serial reference paths against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "pcat/category.hpp"
#include "pcat/correspondence.hpp"
#include "pcat/linear_rep.hpp"
#include "pcat/subgroup.hpp"

using namespace pcat;

namespace {

Exec exec_of(benchmark::State const& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_saturate(benchmark::State& state) {
  std::vector<Partition> gens{named::vierpart(), named::crossing()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturate(gens, 8, 10'000'000, exec_of(state)).size());
  }
}

void BM_closure(benchmark::State& state) {
  std::vector<ReducedWord> gens{ReducedWord::parse("1 2 1 2")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure_generate(gens, 4, {10, 10'000'000, 0}, exec_of(state)).rounds());
  }
}

void BM_f_group(benchmark::State& state) {
  std::vector<Partition> gens{named::vierpart(), named::crossing()};
  auto cat = saturate(gens, 8, 10'000'000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_group_generators(cat, 4, 8, exec_of(state)).entries().size());
  }
}

void BM_t_matrix(benchmark::State& state) {
  auto p = Partition::parse("abcdef|abcdef");
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_matrix(p, 6, exec_of(state)).entries.size());
  }
}

void BM_t_matrix_reference(benchmark::State& state) {
  auto p = Partition::parse("abcdef|abcdef");
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_matrix_reference(p, 6).entries.size());
  }
}

}  // namespace

BENCHMARK(BM_saturate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_f_group)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_t_matrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_t_matrix_reference)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
