#include <benchmark/benchmark.h>

#include "ocelkit/generator.hpp"
#include "ocelkit/io.hpp"
#include "ocelkit/lifecycle.hpp"
#include "ocelkit/pipeline.hpp"
#include "ocelkit/sampling.hpp"
#include "ocelkit/stats.hpp"

using namespace ocelkit;

namespace {

OcelLog make_log(std::int64_t orders, bool global) {
  GenParams p;
  p.orders = static_cast<std::uint64_t>(orders);
  p.global_object_rate = global ? 1.0 : 0.0;
  return generate_o2c(p);
}

void set_events(benchmark::State& state, const OcelLog& log) {
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(log.event_count()));
  state.counters["events"] = static_cast<double>(log.event_count());
}

void BM_ParseJson(benchmark::State& state) {
  const std::string text = write_json_ocel(make_log(state.range(0), true));
  OcelLog log;
  for (auto _ : state) {
    log = parse_json_ocel(text);
    benchmark::DoNotOptimize(log);
  }
  set_events(state, log);
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseJson)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_WriteJson(benchmark::State& state) {
  const OcelLog log = make_log(state.range(0), true);
  for (auto _ : state) benchmark::DoNotOptimize(write_json_ocel(log));
  set_events(state, log);
}
BENCHMARK(BM_WriteJson)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Summarize(benchmark::State& state) {
  const OcelLog log = make_log(state.range(0), true);
  for (auto _ : state) benchmark::DoNotOptimize(summarize(log));
  set_events(state, log);
}
BENCHMARK(BM_Summarize)->Arg(10000)->Unit(benchmark::kMillisecond);

// With the global object every event shares an object with every other.
void BM_EssentialEvents(benchmark::State& state) {
  const OcelLog log = make_log(state.range(0), state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(essential_events(log));
  set_events(state, log);
}
BENCHMARK(BM_EssentialEvents)->Args({1000, 0})->Args({1000, 1})->Args({10000, 0})->Args({10000, 1})
    ->Unit(benchmark::kMillisecond);

void BM_ConnectedSamples(benchmark::State& state) {
  const auto log = std::make_shared<const OcelLog>(make_log(state.range(0), false));
  for (auto _ : state) benchmark::DoNotOptimize(connected_event_samples(log));
  set_events(state, *log);
}
BENCHMARK(BM_ConnectedSamples)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ScalePipeline(benchmark::State& state) {
  const OcelLog log = make_log(state.range(0), true);
  FilterPipeline p;
  p.steps.push_back({StepKind::OTF2, 10, 0.0, {}, {}});
  p.steps.push_back({StepKind::OA_RATIO, 0, 0.5, {}, {}});
  p.steps.push_back({StepKind::OE3, 30000, 0.0, {}, {}});
  for (auto _ : state) {
    PipelineResult r = apply_pipeline(log, p);
    benchmark::DoNotOptimize(connected_event_samples(r.log));
  }
  set_events(state, log);
}
BENCHMARK(BM_ScalePipeline)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
