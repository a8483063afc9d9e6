#include <benchmark/benchmark.h>

#include "mzvlab/kernels.hpp"
#include "mzvlab/linalg.hpp"
#include "mzvlab/matrices.hpp"
#include "mzvlab/numeric.hpp"
#include "mzvlab/period.hpp"

using namespace mzvlab;

namespace {

void BM_BuildC3(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix(Family::kC3, k, 3));
  state.counters["rows"] = static_cast<double>(almost_totally_odd(k, 3).size());
}
BENCHMARK(BM_BuildC3)->DenseRange(20, 40, 10)->Unit(benchmark::kMillisecond);

void BM_RankC3(benchmark::State& state) {
  const QMatrix m = build_matrix(Family::kC3, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankC3)->DenseRange(20, 40, 10)->Unit(benchmark::kMillisecond);

void BM_LeftKernelC3(benchmark::State& state) {
  const QMatrix m = build_matrix(Family::kC3, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(left_kernel(m));
}
BENCHMARK(BM_LeftKernelC3)->DenseRange(20, 40, 10)->Unit(benchmark::kMillisecond);

template <BigInt (*Coeff)(const Index&, const Index&)>
void BM_CCoeff(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const IndexSet rows = almost_totally_odd(k, 3), cols = almost_totally_odd(k, 2);
  for (auto _ : state) {
    for (const auto& m : rows)
      for (const auto& n : cols) benchmark::DoNotOptimize(Coeff(m, n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(rows.size() * cols.size()));
}
BENCHMARK_TEMPLATE(BM_CCoeff, c_coeff)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_CCoeff, c_coeff_fast)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_DoubleZeta(benchmark::State& state) {
  const PrecisionBudget budget = PrecisionBudget::with_digits(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(double_zeta(3, 9, budget));
}
BENCHMARK(BM_DoubleZeta)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMicrosecond);

void BM_PeriodBasis(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(period_basis(PeriodKind::kCuspEven, k));
}
BENCHMARK(BM_PeriodBasis)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
