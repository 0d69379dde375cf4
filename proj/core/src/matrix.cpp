// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/sim/matrix.hpp"

#include "lofamo/node/sensors.hpp"

namespace lofamo::sim {

using network::FaultEvent;
using network::FaultKind;
using supervisor::Component;
using supervisor::Status;
using supervisor::Via;

std::string_view to_string(Detector d) {
  switch (d) {
    case Detector::ReceivingLinkSelfTest: return "receiving-link-self-test";
    case Detector::BothSidesLinkSelfTest: return "both-sides-link-self-test";
    case Detector::SingleSideLinkSelfTest: return "single-side-link-self-test";
    case Detector::Sensors: return "sensors";
    case Detector::DnpFm: return "dnp-fm";
    case Detector::HostWatchdog: return "host-watchdog";
    case Detector::HostFm: return "host-fm";
    case Detector::DnpWatchdog: return "dnp-watchdog";
  }
  return "?";
}

std::vector<Expectation> expected_awareness(const FaultEvent& e, TorusDims dims, const Params& p) {
  std::vector<Expectation> out;
  const NodeCoord far = neighbor(e.node, e.dir, dims);
  auto neighbours_see_broken_links = [&] {
    for (Direction d : kAllDirections) {
      out.push_back({neighbor(e.node, d, dims), supervisor::link_component(opposite(d)),
                     Status::Broken, Via::ServiceNet});
    }
  };
  switch (e.kind) {
    case FaultKind::LinkSick:
      out.push_back({far, supervisor::link_component(opposite(e.dir)), Status::Sick, Via::ServiceNet});
      break;
    case FaultKind::LinkBroken:
      out.push_back({e.node, supervisor::link_component(e.dir), Status::Broken, Via::ServiceNet});
      out.push_back(
          {far, supervisor::link_component(opposite(e.dir)), Status::Broken, Via::ServiceNet});
      break;
    case FaultKind::LinkLogicFailure:
      out.push_back(
          {far, supervisor::link_component(opposite(e.dir)), Status::Broken, Via::ServiceNet});
      break;
    case FaultKind::Sensor: {
      const AlertState s = node::classify_sensor(e.value, p.thresholds(e.quantity));
      if (s != AlertState::Normal) {
        out.push_back({e.node, supervisor::sensor_component(e.quantity), supervisor::from_alert(s),
                       Via::ServiceNet});
      }
      break;
    }
    case FaultKind::CoreSick:
      out.push_back({e.node, Component::DnpCore, Status::Sick, Via::ServiceNet});
      break;
    case FaultKind::CoreMeltdown:
      out.push_back({e.node, Component::DnpCore, Status::Meltdown, Via::ServiceNet});
      neighbours_see_broken_links();
      break;
    case FaultKind::HostComponent:
      if (e.status == TriState::Normal) break;
      if (e.part == HostPart::ServiceNet && e.status == TriState::Broken) {
        out.push_back({e.node, Component::HostServiceNet, Status::Broken, Via::MeshRelay});
      } else {
        out.push_back({e.node, supervisor::host_component(e.part),
                       supervisor::from_tristate(e.status), Via::ServiceNet});
      }
      break;
    case FaultKind::HostBreakdown:
      out.push_back({e.node, Component::Host, Status::Down, Via::MeshRelay});
      break;
    case FaultKind::ServiceLinkCut:
      out.push_back({e.node, Component::HostServiceNet, Status::Broken, Via::MeshRelay});
      break;
    case FaultKind::NodeKill:
      // The node's own DNP is gone, so nobody relays for its host; the
      // neighbours' link self-tests are the only witnesses.
      neighbours_see_broken_links();
      break;
    case FaultKind::LinkRepair:
    case FaultKind::HostRecover:
    case FaultKind::ServiceLinkRestore:
      break;
  }
  return out;
}

std::vector<FaultRow> fault_table(TorusDims dims) {
  const NodeCoord c{dims.nx / 2, dims.ny / 2, dims.nz / 2};
  auto fault = [&](FaultKind k) {
    FaultEvent e;
    e.time = kMatrixFaultTime;
    e.kind = k;
    e.node = c;
    e.dir = Direction::XPlus;
    return e;
  };
  auto sensor = [&](Quantity q, int v) {
    FaultEvent e = fault(FaultKind::Sensor);
    e.quantity = q;
    e.value = v;
    return e;
  };
  auto host_part = [&](HostPart p) {
    FaultEvent e = fault(FaultKind::HostComponent);
    e.part = p;
    e.status = TriState::Broken;
    return e;
  };
  FaultEvent sick = fault(FaultKind::LinkSick);
  sick.error_rate = 0.25;

  return {
      {"link-sick", "link sick", sick, Detector::ReceivingLinkSelfTest, Via::ServiceNet},
      {"link-broken", "link broken", fault(FaultKind::LinkBroken), Detector::BothSidesLinkSelfTest,
       Via::ServiceNet},
      {"link-logic-failure", "link logic failure", fault(FaultKind::LinkLogicFailure),
       Detector::SingleSideLinkSelfTest, Via::ServiceNet},
      {"temperature", "sensor out of range", sensor(Quantity::Temperature, 90), Detector::Sensors,
       Via::ServiceNet},
      {"power", "sensor out of range", sensor(Quantity::Power, 200), Detector::Sensors,
       Via::ServiceNet},
      {"voltage", "sensor out of range", sensor(Quantity::Voltage, 95), Detector::Sensors,
       Via::ServiceNet},
      {"core-sick", "DNP core sick", fault(FaultKind::CoreSick), Detector::DnpFm, Via::ServiceNet},
      {"core-meltdown", "DNP core meltdown", fault(FaultKind::CoreMeltdown),
       Detector::HostWatchdog, Via::ServiceNet},
      {"host-memory", "host component fault", host_part(HostPart::Memory), Detector::HostFm,
       Via::ServiceNet},
      {"host-service-net", "host service link fault", host_part(HostPart::ServiceNet),
       Detector::HostFm, Via::MeshRelay},
      {"host-breakdown", "host breakdown", fault(FaultKind::HostBreakdown), Detector::DnpWatchdog,
       Via::MeshRelay},
  };
}

Scenario matrix_scenario(const FaultRow& row, TorusDims dims, std::uint64_t seed) {
  Scenario sc;
  sc.name = "matrix-" + row.name;
  sc.dims = dims;
  sc.duration = kMatrixDuration;
  sc.seed = seed;
  sc.faults = {row.fault};
  return sc;
}

std::vector<Scenario> fault_matrix(TorusDims dims, std::uint64_t seed) {
  std::vector<Scenario> out;
  for (const auto& row : fault_table(dims)) out.push_back(matrix_scenario(row, dims, seed));
  return out;
}

namespace {

bool has_event(const Trace& t, Tick from, const std::string& entity, std::string_view kind,
               std::string_view what, std::string_view status = {}) {
  for (const auto& e : t.events) {
    if (e.time < from || e.entity != entity || e.kind != kind) continue;
    if (e.get("what") != what) continue;
    if (!status.empty() && e.get("status") != status) continue;
    return true;
  }
  return false;
}

}  // namespace

std::string check_detector(const FaultRow& row, const Trace& trace) {
  const FaultEvent& f = row.fault;
  const NodeCoord far = neighbor(f.node, f.dir, trace.dims);
  const std::string dnp = "dnp@" + to_string(f.node);
  const std::string host = "host@" + to_string(f.node);
  const std::string far_dnp = "dnp@" + to_string(far);
  const std::string near_link = "link." + std::string(to_string(f.dir));
  const std::string far_link = "link." + std::string(to_string(opposite(f.dir)));
  const Tick t0 = f.time;

  auto need = [&](bool ok, const std::string& what) { return ok ? std::string() : what; };
  std::string err;
  switch (row.detector) {
    case Detector::ReceivingLinkSelfTest:
      err = need(has_event(trace, t0, far_dnp, "detect", far_link, "SICK"),
                 far_dnp + " did not flag " + far_link + " SICK");
      if (err.empty() && has_event(trace, t0, dnp, "detect", near_link)) {
        err = dnp + " flagged " + near_link + " although it only transmits on it";
      }
      break;
    case Detector::BothSidesLinkSelfTest:
      err = need(has_event(trace, t0, dnp, "detect", near_link, "BROKEN") &&
                     has_event(trace, t0, far_dnp, "detect", far_link, "BROKEN"),
                 "both ends must flag the cable BROKEN");
      break;
    case Detector::SingleSideLinkSelfTest:
      err = need(has_event(trace, t0, far_dnp, "detect", far_link, "BROKEN"),
                 far_dnp + " did not flag " + far_link + " BROKEN");
      if (err.empty() && has_event(trace, t0, dnp, "detect", near_link)) {
        err = dnp + " flagged " + near_link + " although its link logic is dead";
      }
      break;
    case Detector::Sensors:
      err = need(has_event(trace, t0, dnp, "detect", to_string(f.quantity)),
                 dnp + " did not flag " + std::string(to_string(f.quantity)));
      break;
    case Detector::DnpFm:
      err = need(has_event(trace, t0, dnp, "detect", "dnp.core", "SICK"),
                 dnp + " did not flag its core SICK");
      break;
    case Detector::HostWatchdog:
      err = need(has_event(trace, t0, host, "declare", "dnp-meltdown"),
                 host + " did not declare a DNP meltdown");
      break;
    case Detector::HostFm:
      err = need(has_event(trace, t0, host, "detect",
                           supervisor::to_string(supervisor::host_component(f.part))),
                 host + " did not flag " + std::string(to_string(f.part)));
      break;
    case Detector::DnpWatchdog:
      err = need(has_event(trace, t0, dnp, "declare", "host-down"), dnp + " did not declare the host down");
      break;
  }
  if (!err.empty()) return err;

  const auto expect = expected_awareness(f, trace.dims, Params{});
  if (expect.empty()) return "fault implies no health-map entry";
  const Expectation& x = expect.front();
  for (const auto& e : trace.events) {
    if (e.time < t0 || e.kind != "map") continue;
    if (e.get("node") != to_string(x.subject) || e.get("component") != to_string(x.component) ||
        e.get("after") != to_string(x.status)) {
      continue;
    }
    if (e.get("via") != to_string(row.path)) {
      return "awareness arrived via " + std::string(e.get("via")) + ", expected " +
             std::string(to_string(row.path));
    }
    return {};
  }
  return "supervisor never recorded " + std::string(to_string(x.component)) + "=" +
         std::string(to_string(x.status)) + " for " + to_string(x.subject);
}

}  // namespace lofamo::sim
