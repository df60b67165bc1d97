#include <benchmark/benchmark.h>

#include "superchar/formula.hpp"
#include "superchar/suzhang.hpp"

using namespace superchar;

namespace {

HighestWeight example() { return HighestWeight{3, 3, {3, 2, 2}, {-2, -2, -3}}; }

/// Chain of r nested caps: crosses 0..r-1.
Forest nested_chain(int r) {
  std::map<Position, Symbol> s;
  for (Position p = 0; p < r; ++p) s.emplace(p, Symbol::kCross);
  return gamma(cap_diagram(WeightDiagram(s)));
}

/// Star on r vertices with alternating edge directions.
Forest zigzag_star(int r) {
  Forest g;
  for (int v = 0; v < r; ++v) g.labels.push_back(v);
  for (int v = 1; v < r; ++v) g.edges.push_back(v % 2 == 0 ? Edge{0, v} : Edge{v, 0});
  return g;
}

void BM_Theta(benchmark::State& state) {
  const Forest g = nested_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta(g));
}
BENCHMARK(BM_Theta)->DenseRange(2, 10, 2);

void BM_LinearExtensionsDP(benchmark::State& state) {
  const Forest g = zigzag_star(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linear_extensions_dp(g));
}
BENCHMARK(BM_LinearExtensionsDP)->DenseRange(4, 16, 4);

void BM_IrreducibleChar(benchmark::State& state) {
  const Variant v = state.range(0) == 0 ? Variant::kClassic : Variant::kReduced;
  FormulaOptions opts;
  opts.variant = v;
  opts.check_stability = false;
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_char(example(), opts));
}
BENCHMARK(BM_IrreducibleChar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  OracleOptions opts;
  opts.check_stability = false;
  const HighestWeight chi = state.range(0) == 0 ? HighestWeight{2, 2, {1, 0}, {-1, -1}} : example();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_char(chi, opts));
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KacChar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kac_char(example()));
}
BENCHMARK(BM_KacChar)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
