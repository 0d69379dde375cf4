// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <sstream>

#include "lofamo/node/link_monitor.hpp"
#include "lofamo/registers/status_registers.hpp"
#include "lofamo/rng.hpp"
#include "lofamo/sim/matrix.hpp"
#include "lofamo/sim/world.hpp"

namespace {

using namespace lofamo;

void BM_DnpWdDecodeEncode(benchmark::State& state) {
  Rng rng(1);
  std::vector<std::uint32_t> words;
  for (int i = 0; i < 4096; ++i) {
    std::uint32_t w = static_cast<std::uint32_t>(rng.next()) & registers::kDnpWdMask;
    // Clear the high bit of every two-bit field so each word is legal.
    w &= ~0x05555500u;
    words.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto r = registers::decode_dnp_wd(words[i++ & 4095]);
    benchmark::DoNotOptimize(registers::encode_dnp_wd(r));
  }
}
BENCHMARK(BM_DnpWdDecodeEncode);

void BM_LinkMonitorRecord(benchmark::State& state) {
  node::LinkMonitor mon(Direction::XPlus);
  Rng rng(3);
  for (auto _ : state) {
    mon.record(rng.bernoulli(0.01));
    benchmark::DoNotOptimize(mon.status());
  }
}
BENCHMARK(BM_LinkMonitorRecord);

void BM_FaultFreeRun(benchmark::State& state) {
  sim::Scenario sc;
  const int n = static_cast<int>(state.range(0));
  sc.dims = {n, n, n};
  sc.duration = 500;
  std::uint64_t events = 0;
  for (auto _ : state) {
    ++sc.seed;
    const auto res = sim::run(sc);
    events += res.stats.events;
    benchmark::DoNotOptimize(res.report.records.size());
  }
  state.counters["events/s"] =
      benchmark::Counter(static_cast<double>(events), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_FaultFreeRun)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FaultMatrix(benchmark::State& state) {
  const auto scenarios = sim::fault_matrix();
  for (auto _ : state) {
    for (const auto& sc : scenarios) benchmark::DoNotOptimize(sim::run(sc).trace.events.size());
  }
}
BENCHMARK(BM_FaultMatrix)->Unit(benchmark::kMillisecond);

void BM_TraceWrite(benchmark::State& state) {
  sim::Scenario sc;
  sc.dims = {4, 4, 4};
  const auto trace = sim::run(sc).trace;
  for (auto _ : state) {
    std::ostringstream out;
    sim::write_trace(out, trace);
    benchmark::DoNotOptimize(out.str().size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trace.events.size()));
}
BENCHMARK(BM_TraceWrite);

}  // namespace

BENCHMARK_MAIN();
