#include <benchmark/benchmark.h>

#include "aa/oracle.hpp"
#include "aa/regions.hpp"

namespace {

using namespace aa;

const Params& ref() {
  static const Params p = Params::checked(Rational(2, 5), Rational(9, 20));
  return p;
}

void BM_CmpSqrt2(benchmark::State& state) {
  // Close but unequal, so the comparison squares twice.
  const SqrtSum2 x(Rational(9, 20), Rational(1));
  const SqrtSum2 y(Rational(12, 5), Rational(1, 1000000));
  for (auto _ : state) benchmark::DoNotOptimize(cmp_sqrt2(x, y));
}
BENCHMARK(BM_CmpSqrt2);

void BM_LevelCover(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(level_cover(ref(), n));
}
BENCHMARK(BM_LevelCover)->DenseRange(4, 10, 2);

void BM_OuterCover(benchmark::State& state) {
  const auto op = static_cast<BinaryOp>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(outer_cover(op, ref(), n));
  state.SetLabel(std::string(op_name(op)));
}
BENCHMARK(BM_OuterCover)
    ->ArgsProduct({{static_cast<long>(BinaryOp::Add), static_cast<long>(BinaryOp::Mul),
                    static_cast<long>(BinaryOp::SqrtSum)},
                   {6, 8}})
    ->Unit(benchmark::kMillisecond);

void BM_ClassifyMask(benchmark::State& state) {
  GridSpec g;
  g.nx = 64;
  g.ny = 64;
  for (auto _ : state) {
    for (unsigned j = 0; j < g.ny; ++j) {
      for (unsigned i = 0; i < g.nx; ++i) benchmark::DoNotOptimize(classify_mask(g.lambda_at(i), g.c_at(j)));
    }
  }
  state.SetItemsProcessed(state.iterations() * g.nx * g.ny);
}
BENCHMARK(BM_ClassifyMask)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
