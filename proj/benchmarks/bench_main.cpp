#include <benchmark/benchmark.h>

#include "lambda3/cli/cli.hpp"
#include "lambda3/criteria/criteria.hpp"
#include "lambda3/padic3/cube_table.hpp"
#include "lambda3/padic3/zeta9.hpp"
#include "lambda3/quadfield/class_group.hpp"
#include "lambda3/quadfield/units.hpp"

using namespace lambda3;

static void BM_ClassGroupImag(benchmark::State& st) {
  const auto D = -static_cast<std::int64_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(class_group(D).order());
}
BENCHMARK(BM_ClassGroupImag)->Arg(3299)->Arg(40003)->Arg(99991);

static void BM_ClassGroupReal(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(class_group(st.range(0)).order());
}
BENCHMARK(BM_ClassGroupReal)->Arg(732)->Arg(5981)->Arg(59993);

static void BM_FundamentalUnit(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fundamental_unit(st.range(0)));
}
BENCHMARK(BM_FundamentalUnit)->Arg(93)->Arg(1957)->Arg(59993);

static void BM_LogZeta9(benchmark::State& st) {
  const Zeta9Local u = embed_split_eps(fundamental_unit(24), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(iwasawa_log18_zeta9(u));
}
BENCHMARK(BM_LogZeta9)->Arg(8)->Arg(24)->Arg(64);

static void BM_Analyze(benchmark::State& st) {
  CubeTable::instance();  // built once per process; keep it out of the timing
  for (auto _ : st) benchmark::DoNotOptimize(analyze(st.range(0)));
}
BENCHMARK(BM_Analyze)->Arg(31)->Arg(35)->Arg(107)->Arg(1997);

static void BM_Scan(benchmark::State& st) {
  cli::ScanConfig cfg;
  cfg.d_min = 1;
  cfg.d_max = 500;
  cfg.jobs = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cli::run_scan(cfg).size());
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
