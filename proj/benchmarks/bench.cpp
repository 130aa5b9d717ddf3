#include <benchmark/benchmark.h>

#include "operadica/linalg.hpp"
#include "operadica/posets.hpp"
#include "operadica/presentations.hpp"
#include "operadica/shellability.hpp"

using namespace operadica;

static void BM_rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  QMat m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j)
      m.at(i, j) = Rational(static_cast<long>((i * 31 + j * 17) % 13) - 6, 1 + (j % 5));
  for (auto _ : state) {
    QMat copy = m;
    benchmark::DoNotOptimize(rref(copy));
  }
}
BENCHMARK(BM_rref)->Arg(16)->Arg(32)->Arg(64);

static void BM_koszul_dual(benchmark::State& state) {
  auto p = catalogue::lie1();
  for (auto _ : state) benchmark::DoNotOptimize(koszul_dual(p));
}
BENCHMARK(BM_koszul_dual);

static void BM_white_product(benchmark::State& state) {
  auto lie = catalogue::lie();
  auto com2 = catalogue::com2();
  for (auto _ : state) benchmark::DoNotOptimize(white_product(lie, com2));
}
BENCHMARK(BM_white_product);

static void BM_build_weighted_poset(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_weighted_poset(n));
}
BENCHMARK(BM_build_weighted_poset)->Arg(3)->Arg(4)->Arg(5);

static void BM_rao_weighted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto intervals = maximal_intervals(build_weighted_poset(n));
  for (auto _ : state)
    for (const auto& interval : intervals)
      benchmark::DoNotOptimize(verify_recursive_atom_ordering(interval));
}
BENCHMARK(BM_rao_weighted)->Arg(3)->Arg(4);

static void BM_cohen_macaulay_weighted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto intervals = maximal_intervals(build_weighted_poset(n));
  for (auto _ : state)
    for (const auto& interval : intervals)
      benchmark::DoNotOptimize(check_cohen_macaulay(interval));
}
BENCHMARK(BM_cohen_macaulay_weighted)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
