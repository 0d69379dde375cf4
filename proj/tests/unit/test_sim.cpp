// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "lofamo/error.hpp"
#include "lofamo/sim/matrix.hpp"
#include "lofamo/sim/scenario.hpp"
#include "lofamo/sim/summary.hpp"
#include "lofamo/sim/trace.hpp"
#include "lofamo/sim/world.hpp"

namespace lofamo::sim {
namespace {

using network::FaultEvent;
using network::FaultKind;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FaultEvent fault(Tick t, FaultKind k, NodeCoord n) {
  FaultEvent e;
  e.time = t;
  e.kind = k;
  e.node = n;
  return e;
}

TEST(Scenario, ParsesYaml) {
  const auto sc = parse_scenario(R"(
name: demo
dims: [4, 3, 2]
duration: 300
seed: 9
params:
  dnp_read_period: 10
  temperature_thresholds: [-5, 5, 60, 80]
faults:
  - {time: 50, kind: link-sick, node: [1, 0, 0], dir: X+, error_rate: 0.2}
  - {time: 60, kind: sensor, node: [0, 0, 1], quantity: voltage, value: 95, ramp: 20}
  - {time: 70, kind: host-component, node: [3, 2, 1], part: peripheral0, status: SICK}
)");
  EXPECT_EQ(sc.name, "demo");
  EXPECT_EQ(sc.dims, (TorusDims{4, 3, 2}));
  EXPECT_EQ(sc.params.dnp_read_period, 10);
  EXPECT_EQ(sc.params.temperature.bound[2], 60);
  ASSERT_EQ(sc.faults.size(), 3u);
  EXPECT_EQ(sc.faults[0].dir, Direction::XPlus);
  EXPECT_DOUBLE_EQ(sc.faults[0].error_rate, 0.2);
  EXPECT_EQ(sc.faults[1].quantity, Quantity::Voltage);
  EXPECT_EQ(sc.faults[1].ramp, 20);
  EXPECT_EQ(sc.faults[2].part, HostPart::Peripheral0);
  EXPECT_EQ(sc.faults[2].status, TriState::Sick);
  EXPECT_TRUE(validate(sc).empty());
  EXPECT_EQ(parse_scenario(to_yaml(sc)).faults, sc.faults);
  EXPECT_EQ(to_yaml(parse_scenario(to_yaml(sc))), to_yaml(sc));
}

TEST(Scenario, RejectsUnknownKeysAndKinds) {
  EXPECT_THROW(parse_scenario("name: x\nspeed: 3\n"), Error);
  EXPECT_THROW(parse_scenario("params: {dnp_write_perod: 3}\n"), Error);
  EXPECT_THROW(parse_scenario("faults: [{time: 1, kind: meteor, node: [0,0,0]}]\n"), Error);
  EXPECT_THROW(parse_scenario("faults: [{time: 1, kind: link-broken, node: [0,0,0]}]\n"), Error);
  EXPECT_THROW(parse_scenario("dims: [1, 2]\n"), Error);
  EXPECT_THROW(parse_scenario("dims: [1, 2\n"), Error);
}

TEST(Scenario, ValidationNamesFields) {
  Scenario sc;
  sc.params.dnp_write_period = 12;
  sc.params.host_read_period = 12;
  sc.params.power = registers::Thresholds{{30, 20, 180, 220}};
  sc.faults.push_back(fault(900, FaultKind::HostBreakdown, {5, 0, 0}));
  const auto v = validate(sc);
  auto has = [&](const std::string& field, const std::string& fragment) {
    for (const auto& x : v) {
      if (x.field == field && x.message.find(fragment) != std::string::npos) return true;
    }
    return false;
  };
  EXPECT_TRUE(has("params.dnp_write_period", "watchdog period order"));
  EXPECT_TRUE(has("params.power_thresholds", "unsorted"));
  EXPECT_TRUE(has("faults[0].time", "outside"));
  EXPECT_TRUE(has("faults[0].node", "outside"));
  EXPECT_THROW(World{sc}, InvalidScenario);
}

TEST(Trace, RoundTripAndTruncation) {
  Trace t;
  t.dims = {2, 2, 2};
  t.seed = 17;
  t.emit(0, "host@0,0,0", "heartbeat");
  t.emit(3, "supervisor", "map", {{"node", "1,0,0"}, {"after", "SICK"}});
  const std::string text = to_text(t);
  std::istringstream in(text);
  const Trace back = parse_trace(in);
  EXPECT_EQ(back.events, t.events);
  EXPECT_EQ(back.seed, 17u);
  EXPECT_EQ(back.dims, t.dims);

  std::istringstream cut(text.substr(0, text.rfind("#end")));
  EXPECT_THROW(parse_trace(cut), Error);
  std::istringstream miscount(text.substr(0, text.rfind("#end")) + "#end\tevents=5\n");
  EXPECT_THROW(parse_trace(miscount), Error);
  std::istringstream garbage("hello\n");
  EXPECT_THROW(parse_trace(garbage), Error);
}

TEST(World, FaultFreeRunOnlyHeartbeats) {
  Scenario sc;
  sc.dims = {3, 3, 3};
  sc.duration = 400;
  const auto res = run(sc);
  EXPECT_EQ(res.trace.fault_event_count(), 0u);
  EXPECT_GT(res.trace.events.size(), 0u);
  EXPECT_TRUE(res.report.all_healthy());
  EXPECT_EQ(res.stats.host_wd_missed + res.stats.dnp_wd_missed, 0u);
  EXPECT_GT(res.stats.host_wd_fresh, 0u);
}

TEST(World, SameSeedSameTrace) {
  Scenario sc;
  sc.dims = {3, 3, 3};
  sc.duration = 400;
  FaultEvent e = fault(90, FaultKind::LinkSick, {1, 2, 0});
  e.dir = Direction::YPlus;
  e.error_rate = 0.3;
  sc.faults = {e, fault(150, FaultKind::HostBreakdown, {0, 0, 0})};
  EXPECT_EQ(to_text(run(sc).trace), to_text(run(sc).trace));
  Scenario other = sc;
  other.seed = 2;
  EXPECT_NE(to_text(run(sc).trace), to_text(run(other).trace));
}

TEST(World, InjectChecksTargetAndTime) {
  Scenario sc;
  World w(sc);
  w.run_until(50);
  EXPECT_THROW(w.inject(fault(60, FaultKind::CoreSick, {7, 0, 0})), UnknownTarget);
  EXPECT_THROW(w.inject(fault(10, FaultKind::CoreSick, {0, 0, 0})), Error);
  w.inject(fault(50, FaultKind::CoreSick, {0, 0, 0}));
  w.run_until(100);
  const supervisor::Entry* e = w.health_map().find({0, 0, 0}, supervisor::Component::DnpCore);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->status, supervisor::Status::Sick);
}

TEST(World, SensorRampReachesAlarm) {
  Scenario sc;
  FaultEvent e = fault(20, FaultKind::Sensor, {1, 1, 0});
  e.quantity = Quantity::Temperature;
  e.value = 95;
  e.ramp = 100;
  sc.faults = {e};
  World w(sc);
  w.run_until(60);
  EXPECT_LT(w.tile({1, 1, 0}).dnp.sensors().temperature_c, 95);
  w.run_until(300);
  EXPECT_EQ(w.tile({1, 1, 0}).dnp.sensors().temperature_c, 95);
  const supervisor::Entry* t = w.health_map().find({1, 1, 0}, supervisor::Component::Temperature);
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->status, supervisor::Status::Alarm);
}

TEST(World, HostRecoveryClearsNeighbours) {
  Scenario sc;
  sc.dims = {3, 3, 3};
  sc.duration = 500;
  sc.faults = {fault(100, FaultKind::HostBreakdown, {1, 1, 1}),
               fault(250, FaultKind::HostRecover, {1, 1, 1})};
  const auto res = run(sc);
  EXPECT_TRUE(res.report.all_healthy()) << res.report.to_text();
}

TEST(World, LinkRepairHeals) {
  Scenario sc;
  sc.dims = {3, 3, 3};
  FaultEvent cut = fault(100, FaultKind::LinkBroken, {0, 1, 2});
  cut.dir = Direction::ZPlus;
  FaultEvent fix = cut;
  fix.time = 200;
  fix.kind = FaultKind::LinkRepair;
  sc.faults = {cut, fix};
  EXPECT_TRUE(run(sc).report.all_healthy());
}

TEST(World, ZeroHopLimitFlagsCore) {
  Scenario sc;
  sc.dims = {3, 1, 1};
  sc.params.maxhops = 0;
  sc.faults = {fault(50, FaultKind::HostBreakdown, {0, 0, 0})};
  const auto res = run(sc);
  EXPECT_GT(res.stats.hop_limit_exceeded, 0u);
  bool core_sick = false;
  for (const auto& r : res.report.records) core_sick |= r.component == "dnp.core" && r.status == "SICK";
  EXPECT_TRUE(core_sick);
}

TEST(Matrix, EveryRowMeetsItsDetectorAndPath) {
  const auto rows = fault_table({3, 3, 3});
  EXPECT_EQ(rows.size(), 11u);
  for (const auto& row : rows) {
    const auto res = run(matrix_scenario(row, {3, 3, 3}, 42));
    EXPECT_EQ(check_detector(row, res.trace), "") << row.name;
  }
}

TEST(Matrix, DetectorCheckCatchesWrongSide) {
  auto rows = fault_table({3, 3, 3});
  FaultRow row = rows[0];  // link sick, receiving side only
  row.detector = Detector::BothSidesLinkSelfTest;
  const auto res = run(matrix_scenario(rows[0], {3, 3, 3}, 42));
  EXPECT_NE(check_detector(row, res.trace), "");
  row = rows[0];
  row.path = supervisor::Via::MeshRelay;
  EXPECT_NE(check_detector(row, res.trace), "");
}

TEST(Summary, CountsFaultsAndLatency) {
  Trace t;
  t.dims = {3, 3, 3};
  t.emit(100, "injector", "fault", {{"kind", "link-broken"}, {"node", "1,1,1"}, {"dir", "X+"}});
  t.emit(108, "supervisor", "map",
         {{"node", "2,1,1"}, {"component", "link.X-"}, {"after", "BROKEN"}, {"via", "service"}});
  t.emit(110, "injector", "fault", {{"kind", "host-breakdown"}, {"node", "0,0,0"}});
  t.emit(140, "supervisor", "map",
         {{"node", "0,0,0"}, {"component", "host"}, {"after", "DOWN"}, {"via", "mesh-relay"}});
  t.emit(200, "injector", "fault", {{"kind", "link-repair"}, {"node", "1,1,1"}, {"dir", "X+"}});
  const auto s = summarize(t);
  EXPECT_EQ(s.faults, 2u);
  EXPECT_EQ(s.alerts, 2u);
  EXPECT_EQ(s.to_text(),
            "2 faults, 2 alerts\n"
            "t=100 link-broken 1,1,1 latency=8 path=service\n"
            "t=110 host-breakdown 0,0,0 latency=30 path=mesh-relay→service\n");
  Trace bad = t;
  bad.emit(300, "supervisor", "map", {{"node", "nowhere"}});
  EXPECT_THROW(summarize(bad), Error);
}

TEST(Golden, NodeKillSnapshot) {
  const Scenario sc = load_scenario(LOFAMO_GOLDEN_DIR "/node_kill.yaml");
  const auto res = run(sc);
  EXPECT_EQ(res.report.to_text(), read_file(LOFAMO_GOLDEN_DIR "/node_kill.health.txt"));
}

}  // namespace
}  // namespace lofamo::sim
