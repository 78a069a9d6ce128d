#include <benchmark/benchmark.h>

#include "wavefront/admissible.hpp"
#include "wavefront/biomodel.hpp"
#include "wavefront/speed.hpp"

using namespace wavefront;

namespace {

const ModelSpec& model() {
  static const ModelSpec m = bio::make_model(bio::BioParams{});
  return m;
}

const AdmissibleSet& adm() {
  static const AdmissibleSet s = admissible_set(model());
  return s;
}

void BM_Sweep(benchmark::State& st) {
  const auto exec = st.range(0) ? Execution::Parallel : Execution::Serial;
  const int n = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(sweep(adm(), n, {}, exec));
  st.SetLabel(exec == Execution::Parallel ? "openmp" : "serial");
  st.counters["threads"] = exec == Execution::Parallel ? max_threads() : 1;
}

void BM_SpeedBounds(benchmark::State& st) {
  BoundsOptions o;
  o.exec = st.range(0) ? Execution::Parallel : Execution::Serial;
  o.grid = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(speed_bounds(model(), o));
  st.SetLabel(o.exec == Execution::Parallel ? "openmp" : "serial");
  st.counters["threads"] = o.exec == Execution::Parallel ? max_threads() : 1;
}

}  // namespace

BENCHMARK(BM_Sweep)->ArgsProduct({{0, 1}, {11, 41}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpeedBounds)->ArgsProduct({{0, 1}, {256, 1024}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
