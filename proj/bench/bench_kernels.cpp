#include <benchmark/benchmark.h>
#include <omp.h>

#include "knotpoly/apoly.hpp"
#include "knotpoly/kernels.hpp"
#include "knotpoly/repcheck.hpp"
#include "knotpoly/rmpoly.hpp"

using namespace knotpoly;

namespace {

const LaurentPoly& factor(std::int64_t n) {
  static const LaurentPoly a6 = apoly_theorem(6).poly;
  static const LaurentPoly am6 = apoly_theorem(-6).poly;
  return n > 0 ? a6 : am6;
}

void BM_MulReference(benchmark::State& state) {
  const LaurentPoly& a = factor(1);
  const LaurentPoly& b = factor(-1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_reference(a, b));
  state.counters["terms"] = static_cast<double>(a.size() * b.size());
}

void BM_MulParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const LaurentPoly& a = factor(1);
  const LaurentPoly& b = factor(-1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_parallel(a, b));
}

// A-polynomial by substitution; the substitution sum is the parallel part.
void BM_SubstitutionSerialSum(benchmark::State& state) {
  const LaurentPoly p = rm_closed(state.range(0)).poly;
  const RationalExpr r = substitution_x(state.range(0));
  const std::int64_t d = p.degree(Var::X);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::sum_reference(
        static_cast<std::size_t>(d) + 1, [&](std::size_t k) {
          const auto e = static_cast<std::int64_t>(k);
          return coeff_extract(p, Var::X, e) * pow(r.num(), e) * pow(r.den(), d - e);
        }));
  }
}

void BM_SubstitutionParallelSum(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(1)));
  const LaurentPoly p = rm_closed(state.range(0)).poly;
  const RationalExpr r = substitution_x(state.range(0));
  const std::int64_t d = p.degree(Var::X);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::sum_parallel(
        static_cast<std::size_t>(d) + 1, [&](std::size_t k) {
          const auto e = static_cast<std::int64_t>(k);
          return coeff_extract(p, Var::X, e) * pow(r.num(), e) * pow(r.den(), d - e);
        }));
  }
}

GridOptions grid_options() {
  GridOptions opt;
  opt.ns = {-4, -3, -2, -1, 1, 2, 3, 4};
  opt.samples = 20;
  opt.seed = 1;
  return opt;
}

void BM_GridSerial(benchmark::State& state) {
  const GridOptions opt = grid_options();
  for (auto _ : state) benchmark::DoNotOptimize(verify_grid_serial(opt));
}

void BM_GridParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const GridOptions opt = grid_options();
  for (auto _ : state) benchmark::DoNotOptimize(verify_grid_parallel(opt));
}

}  // namespace

BENCHMARK(BM_MulReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubstitutionSerialSum)->Arg(-6)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubstitutionParallelSum)
    ->Args({-6, 4})
    ->Args({6, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
