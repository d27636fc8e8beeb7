#include <benchmark/benchmark.h>

#include "radonum/lambda_classes.hpp"
#include "radonum/oracle.hpp"
#include "radonum/parser.hpp"
#include "radonum/rainbow.hpp"

using namespace radonum;

namespace {

Equation eqn(const char* text) { return validate(parse_equation(text)); }

void BM_SchurAvoider(benchmark::State& state) {
  i64 n = state.range(0);
  Equation sum2 = eqn("y=x1+x2");
  auto sols = solutions_linear(sum2, n, SolutionMode::repeats_allowed,
                               LinearEnumOptions{.dedupe = true});
  for (auto _ : state) {
    auto found = avoider_search(n, 3, {}, sols);
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_SchurAvoider)->Arg(10)->Arg(12)->Arg(13)->Arg(14);

void BM_EnumerateExactColorings(benchmark::State& state) {
  i64 n = state.range(0);
  for (auto _ : state) {
    i64 count = for_each_exact_coloring(n, 4, [](std::span<const int>) { return true; });
    benchmark::DoNotOptimize(count);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EnumerateExactColorings)->DenseRange(8, 13)->Complexity();

void BM_OracleRb(benchmark::State& state) {
  Equation eq = eqn("y=x^2+1");
  i64 n = state.range(0);
  for (auto _ : state) {
    int rb = oracle_rb(n, eq, SolutionMode::distinct_values);
    benchmark::DoNotOptimize(rb);
  }
}
BENCHMARK(BM_OracleRb)->Arg(8)->Arg(10)->Arg(12);

void BM_MuScan(benchmark::State& state) {
  Equation eq = eqn("y=x^2+1");
  i64 n = state.range(0);
  for (auto _ : state) {
    auto mu = mu_scan(eq, n);
    benchmark::DoNotOptimize(mu);
  }
}
BENCHMARK(BM_MuScan)->Range(1 << 10, 1 << 20);

void BM_CanonicalColoring(benchmark::State& state) {
  Equation eq = eqn("y=2*x+1");
  i64 n = state.range(0);
  for (auto _ : state) {
    Coloring c = canonical_coloring(eq, n);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CanonicalColoring)->Range(1 << 8, 1 << 16)->Complexity();

void BM_BlockColorScan(benchmark::State& state) {
  for (auto _ : state) {
    bool all_differ = true;
    for (i64 m = 1; m <= 10'000; ++m)
      all_differ &= block_color(2, 1, m) != block_color(2, 1, 2 * m + 1);
    benchmark::DoNotOptimize(all_differ);
  }
}
BENCHMARK(BM_BlockColorScan);

}  // namespace

BENCHMARK_MAIN();
