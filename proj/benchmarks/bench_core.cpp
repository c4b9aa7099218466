#include <benchmark/benchmark.h>

#include "hilbasket/hilbert.hpp"
#include "hilbasket/quiver.hpp"
#include "hilbasket/reconstruct.hpp"

using namespace hilbasket;

static void BM_DedekindSum(benchmark::State& state) {
  const auto r = state.range(0);
  std::int64_t i = 0;
  for (auto _ : state) {
    // distinct i each round so the memo does not answer
    benchmark::DoNotOptimize(dedekind_sum(r, 1 + (i % (r - 2)), i));
    ++i;
  }
}
BENCHMARK(BM_DedekindSum)->Arg(17)->Arg(61)->Arg(199);

static void BM_DeltaLatticeSweep(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::int64_t ell = 3; ell <= state.range(0); ++ell) total += delta_lattice(ell).rank;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_DeltaLatticeSweep)->Arg(20)->Arg(34)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  DeltaVector d;
  d.ell = 5;
  d.entries = state.range(0) ? std::vector<Integer>{8, -1, 8} : std::vector<Integer>{2, 1, 2};
  EnumerateOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reduced_baskets(5, d, opts).baskets.size());
}
BENCHMARK(BM_Enumerate)->Args({0, 1})->Args({1, 1})->Args({1, 4})->Unit(benchmark::kMillisecond);

static void BM_AnalyzeSeries(benchmark::State& state) {
  const RationalFunction h = assemble_series(parse_basket("1/5(1,1), 1/15(1,2)"), Rational(13, 5)).series;
  for (auto _ : state) benchmark::DoNotOptimize(analyze_series(h).choices.size());
}
BENCHMARK(BM_AnalyzeSeries)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
