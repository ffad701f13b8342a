#include <benchmark/benchmark.h>

#include "reltt/builders.hpp"
#include "reltt/kernel.hpp"
#include "reltt/reduction.hpp"
#include "reltt/stdlib.hpp"

using namespace reltt;

static void BM_NormalizeAddTwoTwo(benchmark::State& state) {
  Stdlib lib = build_stdlib();
  Term sum = Term::apply(lib.term("add"), {numeral(lib, 2), numeral(lib, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(normalize(sum, kDefaultFuel));
}
BENCHMARK(BM_NormalizeAddTwoTwo);

static void BM_NormalizeNumeral(benchmark::State& state) {
  Stdlib lib = build_stdlib();
  Term n = numeral(lib, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(n, 100000));
}
BENCHMARK(BM_NormalizeNumeral)->Arg(4)->Arg(16)->Arg(64);

static void BM_CheckTrueFalse(benchmark::State& state) {
  RelType r = RelType::var("R");
  Context g = fig3_context(r);
  Proof p = fig3(r);
  for (auto _ : state) benchmark::DoNotOptimize(check(g, p));
}
BENCHMARK(BM_CheckTrueFalse);

static void BM_BuildStdlib(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_stdlib());
}
BENCHMARK(BM_BuildStdlib)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
