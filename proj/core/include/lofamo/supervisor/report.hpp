// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "lofamo/node/coord.hpp"
#include "lofamo/registers/types.hpp"
#include "lofamo/time.hpp"

namespace lofamo::supervisor {

// Per-node component tracked by the health map. The first six are the
// links, in direction order.
enum class Component : std::uint8_t {
  LinkZMinus,
  LinkZPlus,
  LinkYMinus,
  LinkYPlus,
  LinkXMinus,
  LinkXPlus,
  Temperature,
  Power,
  Voltage,
  DnpCore,
  Host,
  HostServiceNet,
  HostMemory,
  HostPeripheral0,
  HostPeripheral1,
};

inline constexpr std::size_t kComponentCount = 15;

Component link_component(Direction d);
Component sensor_component(Quantity q);
Component host_component(HostPart p);
std::optional<Direction> link_direction(Component c);

std::string_view to_string(Component c);
std::optional<Component> parse_component(std::string_view text);

enum class Status : std::uint8_t { Normal, Sick, Broken, Warning, Alarm, Meltdown, Down };

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view text);
Status from_tristate(TriState s);
Status from_alert(AlertState s);

enum class Via : std::uint8_t { ServiceNet, MeshRelay };

std::string_view to_string(Via v);
std::optional<Via> parse_via(std::string_view text);

namespace report {
struct LinkStatus {
  Direction dir;
  TriState status;
};
struct SensorAlert {
  Quantity quantity;
  AlertState state;
};
struct DnpCoreSick {};
struct DnpCoreMeltdown {};
struct HostComponent {
  HostPart part;
  TriState status;
};
struct HostDown {};
struct Heartbeat {};
struct AllClear {
  Component component;
};
}  // namespace report

using ReportBody =
    std::variant<report::LinkStatus, report::SensorAlert, report::DnpCoreSick,
                 report::DnpCoreMeltdown, report::HostComponent, report::HostDown,
                 report::Heartbeat, report::AllClear>;

// A message from a host fault manager to the supervisor. subject differs
// from reporter only for mesh-relayed news about a neighbour.
struct Report {
  NodeCoord reporter;
  NodeCoord subject;
  ReportBody body;
  Via via = Via::ServiceNet;
  Tick time = 0;
};

bool is_heartbeat(const Report& r);

// The (component, status) a report asserts about its subject; empty for
// heartbeats.
std::optional<std::pair<Component, Status>> effect(const Report& r);

// Short tag such as "link-status" or "heartbeat".
std::string_view kind_name(const Report& r);

}  // namespace lofamo::supervisor
