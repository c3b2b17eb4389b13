#include <benchmark/benchmark.h>

#include "sqc/classify.hpp"
#include "sqc/datum.hpp"
#include "sqc/enumerate.hpp"
#include "sqc/families.hpp"
#include "sqc/present.hpp"

using namespace sqc;

static void BM_CanonicalForm(benchmark::State& st) {
  Datum d = gamma66(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->Arg(1)->Arg(104);

static void BM_SValues(benchmark::State& st) {
  Datum d = worked_example_datum();
  auto g = build_graph(d, 1);
  for (auto _ : st) benchmark::DoNotOptimize(s_values(g, int(st.range(0))));
}
BENCHMARK(BM_SValues)->Arg(14)->Arg(64);

static void BM_ClassifySide(benchmark::State& st) {
  Datum d = gamma66(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(classify_projection(d, 1));
}
BENCHMARK(BM_ClassifySide)->Arg(2)->Arg(104);

static void BM_Quotient(benchmark::State& st) {
  Datum d = gamma66(2);
  for (auto _ : st) benchmark::DoNotOptimize(quotient(d, {"[a1^3, a2^4]"}));
}
BENCHMARK(BM_Quotient)->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& st) {
  CensusOptions opt;
  opt.enumeration.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(census(3, int(st.range(0)), Constraint{}, opt));
}
BENCHMARK(BM_Census)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
