// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lofamo/error.hpp"
#include "lofamo/registers/status_registers.hpp"
#include "lofamo/registers/temperature.hpp"
#include "lofamo/sim/matrix.hpp"
#include "lofamo/sim/summary.hpp"
#include "lofamo/sim/world.hpp"

using namespace lofamo;
using network::FaultEvent;
using network::FaultKind;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0: no runtime limit
  std::function<Outcome()> check;
};

// --- 1: register codecs ------------------------------------------------------

unsigned field(std::uint32_t w, unsigned lsb, unsigned width) {
  return (w >> lsb) & ((1u << width) - 1);
}

Outcome codecs() {
  Outcome o;
  int host_legal = 0;
  for (std::uint32_t w = 0; w < 512; ++w) {
    bool legal = true;
    for (unsigned f = 0; f < 4; ++f) legal &= field(w, 1 + 2 * f, 2) != 3;
    try {
      const auto r = registers::decode_host_wd(w);
      if (!legal || registers::encode_host_wd(r) != w) o.pass = false;
      ++host_legal;
    } catch (const IllegalEncoding&) {
      if (legal) o.pass = false;
    }
  }

  std::mt19937_64 gen(20260101);
  std::uniform_int_distribution<unsigned> code(0, 2), bit(0, 1);
  int dnp_ok = 0, remote_ok = 0;
  for (int i = 0; i < 100000; ++i) {
    // Build a legal word field by field, then require decode/encode to
    // reproduce every field and the exact word.
    std::uint32_t w = bit(gen);
    unsigned fail[6], link[6];
    for (unsigned d = 0; d < 6; ++d) w |= (fail[d] = bit(gen)) << (1 + d);
    const unsigned core = code(gen), power = code(gen), volt = code(gen), temp = code(gen);
    w |= core << 7 | power << 9 | volt << 11 | temp << 13;
    for (unsigned d = 0; d < 6; ++d) w |= (link[d] = code(gen)) << (15 + 2 * d);
    const auto r = registers::decode_dnp_wd(w);
    bool ok = r.valid == ((w & 1u) != 0) && static_cast<unsigned>(r.core) == core &&
              static_cast<unsigned>(r.power) == power &&
              static_cast<unsigned>(r.voltage) == volt &&
              static_cast<unsigned>(r.temperature) == temp && registers::encode_dnp_wd(r) == w;
    for (unsigned d = 0; d < 6; ++d) {
      ok &= r.neighbor_host_fail[d] == (fail[d] != 0) &&
            static_cast<unsigned>(r.link[d]) == link[d];
    }
    dnp_ok += ok;

    const std::uint32_t rw = static_cast<std::uint32_t>(gen()) & 0x00ffffffu;
    const auto rf = registers::decode_remote_fault(rw);
    bool rok = registers::encode_remote_fault(rf) == rw;
    for (unsigned d = 0; d < 6; ++d) rok &= rf.dir[d].nibble() == field(rw, 4 * d, 4);
    remote_ok += rok;
  }

  const std::pair<std::uint8_t, int> rows[] = {
      {0xFF, 127}, {0xE4, 100}, {0xD5, 85},  {0xD0, 80},  {0xB2, 50},  {0x9E, 30},  {0x8A, 10},
      {0x80, 0},   {0x76, -10}, {0x6C, -20}, {0x62, -30}, {0x4E, -50}, {0x3A, -70}};
  int temp_ok = 0;
  for (auto [raw, c] : rows) {
    temp_ok += registers::temp_decode(raw) == c && registers::temp_encode(c) == raw;
  }
  o.pass = o.pass && host_legal == 162 && dnp_ok == 100000 && remote_ok == 100000 &&
           temp_ok == 13;
  o.detail = "host-wd 512/512 words (" + std::to_string(host_legal) + " legal), dnp-wd " +
             std::to_string(dnp_ok) + "/100000, remote-fault " + std::to_string(remote_ok) +
             "/100000, temperature rows " + std::to_string(temp_ok) + "/13";
  return o;
}

// --- 2: watchdog freshness ---------------------------------------------------

Outcome freshness() {
  std::uint64_t missed = 0, declared = 0, fresh = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    sim::Scenario sc;
    sc.name = "fresh";
    sc.seed = seed;
    sc.params.dnp_write_period = sc.params.host_write_period = 5;
    sc.params.dnp_read_period = sc.params.host_read_period = 12;
    const auto res = sim::run(sc);
    missed += res.stats.host_wd_missed + res.stats.dnp_wd_missed;
    declared += res.stats.host_declared_down + res.stats.dnp_declared_down;
    fresh += res.stats.host_wd_fresh + res.stats.dnp_wd_fresh;
  }
  return {missed == 0 && declared == 0 && fresh > 0,
          "1000 runs, " + std::to_string(fresh) + " fresh reads, " + std::to_string(missed) +
              " missed, " + std::to_string(declared) + " declarations"};
}

// --- 3: fault matrix ---------------------------------------------------------

Outcome matrix() {
  const TorusDims dims{3, 3, 3};
  const auto rows = sim::fault_table(dims);
  int passed = 0;
  std::string failures;
  for (const auto& row : rows) {
    const auto res = sim::run(sim::matrix_scenario(row, dims, 42));
    const auto expect = sim::expected_awareness(row.fault, dims, sim::Params{});
    bool found = false;
    if (!expect.empty()) {
      const auto& x = expect.front();
      const std::string via = "@" + std::string(supervisor::to_string(row.path));
      for (const auto& r : res.report.records) {
        found |= r.node == x.subject && r.component == supervisor::to_string(x.component) &&
                 r.status == supervisor::to_string(x.status) && r.provenance.ends_with(via);
      }
    }
    const std::string detector = sim::check_detector(row, res.trace);
    if (found && detector.empty()) {
      ++passed;
    } else {
      failures += " " + row.name + (found ? "" : "[no entry]") +
                  (detector.empty() ? "" : "[" + detector + "]");
    }
  }
  return {passed == static_cast<int>(rows.size()),
          std::to_string(passed) + "/" + std::to_string(rows.size()) +
              " scenarios (all table rows)" + failures};
}

// --- 4: dead-node inference --------------------------------------------------

sim::RunResult single(FaultKind kind, std::uint64_t seed) {
  sim::Scenario sc;
  sc.dims = {3, 3, 3};
  sc.duration = 600;
  sc.seed = seed;
  FaultEvent e;
  e.time = 100;
  e.kind = kind;
  e.node = {1, 1, 1};
  sc.faults = {e};
  return sim::run(sc);
}

Outcome dead_node() {
  const auto kill = single(FaultKind::NodeKill, 42);
  const auto cut = single(FaultKind::ServiceLinkCut, 42);
  std::size_t evidence = 0;
  bool dead = false;
  for (const auto& inf : kill.report.inferences) {
    if (inf.node == NodeCoord{1, 1, 1} && inf.kind == supervisor::Inference::Kind::NodeDead) {
      dead = true;
      evidence = inf.evidence.size();
    }
  }
  bool control_dead = false, control_silent = false;
  for (const auto& inf : cut.report.inferences) {
    control_dead |= inf.kind == supervisor::Inference::Kind::NodeDead;
    control_silent |= inf.node == NodeCoord{1, 1, 1} &&
                      inf.kind == supervisor::Inference::Kind::SilentNode;
  }
  return {dead && evidence >= 1 && !control_dead && control_silent,
          std::string("node-kill ") + (dead ? "NodeDead" : "no NodeDead") + " with " +
              std::to_string(evidence) + " evidence items; service-link-cut control " +
              (control_dead ? "NodeDead" : control_silent ? "SilentNode" : "no inference")};
}

// --- 5: no false positives ---------------------------------------------------

Outcome no_false_positives() {
  int healthy = 0;
  std::size_t inferences = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    sim::Scenario sc;
    sc.dims = {4, 4, 4};
    sc.seed = seed;
    const auto res = sim::run(sc);
    healthy += res.report.all_healthy() && res.report.inferences.empty();
    inferences += res.report.inferences.size();
  }
  return {healthy == 500, std::to_string(healthy) + "/500 all-healthy, " +
                              std::to_string(inferences) + " inferences"};
}

// --- 6: awareness latency ----------------------------------------------------

Outcome latency() {
  const sim::Params p;
  const Tick bound = p.miss_tolerance * p.max_read_period() + p.mesh_latency + p.service_latency +
                     p.heartbeat_period;
  std::vector<sim::Scenario> scenarios;
  const TorusDims dims{3, 3, 3};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (const auto& row : sim::fault_table(dims)) {
      scenarios.push_back(sim::matrix_scenario(row, dims, seed));
    }
    for (FaultKind k : {FaultKind::NodeKill, FaultKind::ServiceLinkCut}) {
      sim::Scenario sc;
      sc.dims = dims;
      sc.duration = 600;
      sc.seed = seed;
      FaultEvent e;
      e.time = 100;
      e.kind = k;
      e.node = {static_cast<int>(seed % 3), 1, 2};
      sc.faults = {e};
      scenarios.push_back(sc);
    }
  }
  Tick worst = 0;
  int runs = 0, ok = 0;
  std::string failures;
  for (const auto& sc : scenarios) {
    const auto s = sim::summarize(sim::run(sc).trace);
    ++runs;
    const auto& a = s.awareness.at(0);
    if (a.latency && *a.latency <= bound) {
      ++ok;
      worst = std::max(worst, *a.latency);
    } else if (failures.size() < 200) {
      failures += " " + sc.name + "/seed" + std::to_string(sc.seed) + "=" +
                  (a.latency ? std::to_string(*a.latency) : "none");
    }
  }
  return {ok == runs, std::to_string(ok) + "/" + std::to_string(runs) +
                          " runs within bound " + std::to_string(bound) + ", worst " +
                          std::to_string(worst) + failures};
}

// --- 7: determinism ----------------------------------------------------------

std::string trace_file_bytes(const sim::Scenario& sc, const std::filesystem::path& path) {
  {
    std::ofstream out(path, std::ios::binary);
    sim::write_trace(out, sim::run(sc).trace);
  }
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  std::vector<sim::Scenario> scenarios = sim::fault_matrix();
  sim::Scenario mixed;
  mixed.name = "mixed";
  mixed.dims = {4, 3, 3};
  mixed.duration = 800;
  mixed.seed = 1234;
  std::mt19937_64 gen(77);
  for (int i = 0; i < 12; ++i) {
    FaultEvent e;
    e.time = 50 + 50 * i;
    e.kind = static_cast<FaultKind>(gen() % 13);
    e.node = {static_cast<int>(gen() % 4), static_cast<int>(gen() % 3),
              static_cast<int>(gen() % 3)};
    e.dir = kAllDirections[gen() % 6];
    e.error_rate = 0.2;
    e.quantity = Quantity::Power;
    e.value = 230;
    e.ramp = 30;
    mixed.faults.push_back(e);
  }
  scenarios.push_back(mixed);

  const auto dir = std::filesystem::temp_directory_path() / "lofamo_acceptance";
  std::filesystem::create_directories(dir);
  int same = 0;
  for (const auto& sc : scenarios) {
    const auto a = trace_file_bytes(sc, dir / "a.trace.tsv");
    const auto b = trace_file_bytes(sc, dir / "b.trace.tsv");
    same += !a.empty() && a == b;
  }
  std::filesystem::remove_all(dir);
  return {same == static_cast<int>(scenarios.size()),
          std::to_string(same) + "/" + std::to_string(scenarios.size()) +
              " scenarios byte-identical across two runs"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "register codecs", 5.0, codecs},
      {2, "watchdog freshness", 30.0, freshness},
      {3, "fault matrix soundness", 60.0, matrix},
      {4, "dead-node inference", 0.0, dead_node},
      {5, "no false positives", 0.0, no_false_positives},
      {6, "awareness latency bound", 0.0, latency},
      {7, "determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0.0 || s < c.limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] criterion %d: %s: %s; %.2f s", pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), s);
    if (c.limit_s > 0.0) std::printf(" (limit %.0f s)", c.limit_s);
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
