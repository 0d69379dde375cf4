// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/supervisor/report.hpp"

#include <array>

namespace lofamo::supervisor {
namespace {

constexpr std::array<std::string_view, kComponentCount> kComponentNames = {
    "link.Z-",      "link.Z+", "link.Y-", "link.Y+",  "link.X-",
    "link.X+",      "temperature", "power", "voltage", "dnp.core",
    "host",         "host.service_net", "host.memory", "host.peripheral0",
    "host.peripheral1"};

constexpr std::array<std::string_view, 7> kStatusNames = {
    "NORMAL", "SICK", "BROKEN", "WARNING", "ALARM", "MELTDOWN", "DOWN"};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Component link_component(Direction d) { return static_cast<Component>(index(d)); }

Component sensor_component(Quantity q) {
  switch (q) {
    case Quantity::Temperature: return Component::Temperature;
    case Quantity::Power: return Component::Power;
    case Quantity::Voltage: return Component::Voltage;
  }
  return Component::Temperature;
}

Component host_component(HostPart p) {
  switch (p) {
    case HostPart::ServiceNet: return Component::HostServiceNet;
    case HostPart::Memory: return Component::HostMemory;
    case HostPart::Peripheral0: return Component::HostPeripheral0;
    case HostPart::Peripheral1: return Component::HostPeripheral1;
  }
  return Component::HostServiceNet;
}

std::optional<Direction> link_direction(Component c) {
  auto i = static_cast<std::size_t>(c);
  if (i < kDirections) return static_cast<Direction>(i);
  return std::nullopt;
}

std::string_view to_string(Component c) { return kComponentNames[static_cast<std::size_t>(c)]; }

std::optional<Component> parse_component(std::string_view text) {
  for (std::size_t i = 0; i < kComponentNames.size(); ++i) {
    if (kComponentNames[i] == text) return static_cast<Component>(i);
  }
  return std::nullopt;
}

std::string_view to_string(Status s) { return kStatusNames[static_cast<std::size_t>(s)]; }

std::optional<Status> parse_status(std::string_view text) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i) {
    if (kStatusNames[i] == text) return static_cast<Status>(i);
  }
  return std::nullopt;
}

Status from_tristate(TriState s) {
  switch (s) {
    case TriState::Normal: return Status::Normal;
    case TriState::Sick: return Status::Sick;
    case TriState::Broken: return Status::Broken;
  }
  return Status::Normal;
}

Status from_alert(AlertState s) {
  switch (s) {
    case AlertState::Normal: return Status::Normal;
    case AlertState::Warning: return Status::Warning;
    case AlertState::Alarm: return Status::Alarm;
  }
  return Status::Normal;
}

std::string_view to_string(Via v) { return v == Via::ServiceNet ? "service" : "mesh-relay"; }

std::optional<Via> parse_via(std::string_view text) {
  if (text == "service") return Via::ServiceNet;
  if (text == "mesh-relay") return Via::MeshRelay;
  return std::nullopt;
}

bool is_heartbeat(const Report& r) { return std::holds_alternative<report::Heartbeat>(r.body); }

std::optional<std::pair<Component, Status>> effect(const Report& r) {
  using Result = std::optional<std::pair<Component, Status>>;
  return std::visit(
      Overloaded{
          [](const report::LinkStatus& b) -> Result {
            return std::pair{link_component(b.dir), from_tristate(b.status)};
          },
          [](const report::SensorAlert& b) -> Result {
            return std::pair{sensor_component(b.quantity), from_alert(b.state)};
          },
          [](const report::DnpCoreSick&) -> Result {
            return std::pair{Component::DnpCore, Status::Sick};
          },
          [](const report::DnpCoreMeltdown&) -> Result {
            return std::pair{Component::DnpCore, Status::Meltdown};
          },
          [](const report::HostComponent& b) -> Result {
            return std::pair{host_component(b.part), from_tristate(b.status)};
          },
          [](const report::HostDown&) -> Result {
            return std::pair{Component::Host, Status::Down};
          },
          [](const report::Heartbeat&) -> Result { return std::nullopt; },
          [](const report::AllClear& b) -> Result {
            return std::pair{b.component, Status::Normal};
          },
      },
      r.body);
}

std::string_view kind_name(const Report& r) {
  static constexpr std::array<std::string_view, std::variant_size_v<ReportBody>> kNames = {
      "link-status", "sensor-alert", "dnp-core-sick", "dnp-core-meltdown",
      "host-component", "host-down", "heartbeat", "all-clear"};
  return kNames[r.body.index()];
}

}  // namespace lofamo::supervisor
