// Serial reference vs blocked Gray-code search vs its OpenMP-parallel run, and
// serial vs parallel multistart ascent.
//
//   ./build/bench_kernels --benchmark_filter=SignSearch

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "l1l2/kernels.hpp"
#include "l1l2/subspace.hpp"

namespace {

using namespace l1l2;

Subspace random_subspace(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Vector> span;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<double> v(n);
    for (auto& a : v) a = g(rng);
    span.push_back(Vector::real(v));
  }
  return Subspace::from_spanning_set(span);
}

void BM_SignSearchReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = random_subspace(n, n / 3 + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sign_search_reference(s.basis()));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n - 1)));
}

void BM_SignSearchSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = random_subspace(n, n / 3 + 1, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::sign_search(s.basis(), kernels::ExecPolicy::Serial));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n - 1)));
}

void BM_SignSearchParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = random_subspace(n, n / 3 + 1, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::sign_search(s.basis(), kernels::ExecPolicy::Parallel));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n - 1)));
}

void BM_MultistartSerial(benchmark::State& state) {
  const auto s = random_subspace(static_cast<std::size_t>(state.range(0)), 4, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::multistart_ascent(s.basis(), 32, 0, kernels::ExecPolicy::Serial));
}

void BM_MultistartParallel(benchmark::State& state) {
  const auto s = random_subspace(static_cast<std::size_t>(state.range(0)), 4, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::multistart_ascent(s.basis(), 32, 0, kernels::ExecPolicy::Parallel));
}

}  // namespace

BENCHMARK(BM_SignSearchReference)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignSearchSerial)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignSearchParallel)->DenseRange(12, 22, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultistartSerial)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultistartParallel)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
