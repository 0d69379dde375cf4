// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/sim/summary.hpp"

#include <sstream>

#include "lofamo/error.hpp"
#include "lofamo/supervisor/report.hpp"

namespace lofamo::sim {

namespace {

using supervisor::Component;

struct MapEvent {
  Tick time;
  NodeCoord node;
  Component component;
  std::string after;
  std::string via;
};

template <typename T>
T require(std::optional<T> v, const TraceEvent& e, std::string_view key) {
  if (!v) {
    throw Error("event at t=" + std::to_string(e.time) + " (" + e.kind + ") has bad or missing " +
                std::string(key));
  }
  return *v;
}

bool is_restoration(network::FaultKind k) {
  return k == network::FaultKind::LinkRepair || k == network::FaultKind::HostRecover ||
         k == network::FaultKind::ServiceLinkRestore;
}

bool link_toward(const MapEvent& m, NodeCoord n, Direction d, TorusDims dims) {
  return (m.node == n && m.component == supervisor::link_component(d)) ||
         (m.node == neighbor(n, d, dims) && m.component == supervisor::link_component(opposite(d)));
}

bool neighbour_lost_link(const MapEvent& m, NodeCoord n, TorusDims dims) {
  if (m.after != "BROKEN") return false;
  for (Direction d : kAllDirections) {
    if (m.node == neighbor(n, d, dims) && m.component == supervisor::link_component(opposite(d))) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string TraceSummary::to_text() const {
  std::ostringstream out;
  out << faults << " faults, " << alerts << " alerts\n";
  for (const auto& a : awareness) {
    out << "t=" << a.injected << ' ' << a.kind << ' ' << to_string(a.node) << " latency=";
    if (a.latency) {
      out << *a.latency << " path=" << a.path;
    } else {
      out << "none";
    }
    out << '\n';
  }
  return out.str();
}

TraceSummary summarize(const Trace& trace) {
  using network::FaultKind;
  struct Fault {
    Tick time;
    FaultKind kind;
    NodeCoord node;
    Direction dir = Direction::XPlus;
    std::string quantity;
    std::string part;
    std::string status;
  };
  std::vector<Fault> faults;
  std::vector<MapEvent> maps;
  TraceSummary s;

  for (const auto& e : trace.events) {
    if (e.kind == "fault") {
      Fault f;
      f.time = e.time;
      f.kind = require(network::parse_fault_kind(e.get("kind")), e, "kind");
      f.node = require(parse_coord(e.get("node")), e, "node");
      if (network::uses_direction(f.kind)) f.dir = require(parse_direction(e.get("dir")), e, "dir");
      f.quantity = e.get("quantity");
      f.part = e.get("part");
      f.status = e.get("status");
      if (!trace.dims.contains(f.node)) throw Error("fault node outside the torus");
      if (!is_restoration(f.kind)) faults.push_back(std::move(f));
    } else if (e.kind == "map") {
      MapEvent m;
      m.time = e.time;
      m.node = require(parse_coord(e.get("node")), e, "node");
      m.component = require(supervisor::parse_component(e.get("component")), e, "component");
      m.after = e.get("after");
      m.via = e.get("via");
      if (m.after.empty() || m.via.empty()) throw Error("map event lacks after/via");
      if (m.after != "NORMAL") {
        ++s.alerts;
        maps.push_back(std::move(m));
      }
    }
  }

  s.faults = faults.size();
  for (const auto& f : faults) {
    FaultAwareness a;
    a.injected = f.time;
    a.kind = std::string(network::to_string(f.kind));
    a.node = f.node;
    auto matches = [&](const MapEvent& m) {
      switch (f.kind) {
        case FaultKind::LinkSick:
        case FaultKind::LinkBroken:
        case FaultKind::LinkLogicFailure:
          return link_toward(m, f.node, f.dir, trace.dims);
        case FaultKind::Sensor:
          return m.node == f.node && supervisor::to_string(m.component) == f.quantity;
        case FaultKind::CoreSick:
          return m.node == f.node && m.component == Component::DnpCore && m.after == "SICK";
        case FaultKind::CoreMeltdown:
          return m.node == f.node && m.component == Component::DnpCore && m.after == "MELTDOWN";
        case FaultKind::HostComponent:
          return m.node == f.node && supervisor::to_string(m.component) == "host." + f.part &&
                 m.after == f.status;
        case FaultKind::HostBreakdown:
          return m.node == f.node && m.component == Component::Host && m.after == "DOWN";
        case FaultKind::NodeKill:
          return (m.node == f.node && m.component == Component::Host && m.after == "DOWN") ||
                 neighbour_lost_link(m, f.node, trace.dims);
        case FaultKind::ServiceLinkCut:
          return m.node == f.node && m.component == Component::HostServiceNet &&
                 m.after == "BROKEN";
        default:
          return false;
      }
    };
    for (const auto& m : maps) {
      if (m.time < f.time || !matches(m)) continue;
      a.latency = m.time - f.time;
      a.path = m.via == "service" ? "service" : "mesh-relay→service";
      break;
    }
    s.awareness.push_back(std::move(a));
  }
  return s;
}

}  // namespace lofamo::sim
