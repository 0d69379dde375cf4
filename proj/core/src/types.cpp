// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/registers/types.hpp"

namespace lofamo {

std::string_view to_string(Direction d) {
  static constexpr std::array<std::string_view, kDirections> kNames = {
      "Z-", "Z+", "Y-", "Y+", "X-", "X+"};
  return kNames[index(d)];
}

std::string_view to_string(TriState s) {
  switch (s) {
    case TriState::Normal: return "NORMAL";
    case TriState::Sick: return "SICK";
    case TriState::Broken: return "BROKEN";
  }
  return "?";
}

std::string_view to_string(AlertState s) {
  switch (s) {
    case AlertState::Normal: return "NORMAL";
    case AlertState::Warning: return "WARNING";
    case AlertState::Alarm: return "ALARM";
  }
  return "?";
}

std::string_view to_string(CoreStatus s) {
  switch (s) {
    case CoreStatus::Normal: return "NORMAL";
    case CoreStatus::Sick: return "SICK";
    case CoreStatus::Unassigned: return "UNASSIGNED";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view text) {
  for (Direction d : kAllDirections) {
    if (to_string(d) == text) return d;
  }
  return std::nullopt;
}

std::optional<TriState> parse_tristate(std::string_view text) {
  for (TriState s : {TriState::Normal, TriState::Sick, TriState::Broken}) {
    if (to_string(s) == text) return s;
  }
  if (text == "normal") return TriState::Normal;
  if (text == "sick") return TriState::Sick;
  if (text == "broken") return TriState::Broken;
  return std::nullopt;
}

}  // namespace lofamo

namespace lofamo {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::Temperature: return "temperature";
    case Quantity::Power: return "power";
    case Quantity::Voltage: return "voltage";
  }
  return "?";
}

std::string_view to_string(HostPart p) {
  switch (p) {
    case HostPart::ServiceNet: return "service_net";
    case HostPart::Memory: return "memory";
    case HostPart::Peripheral0: return "peripheral0";
    case HostPart::Peripheral1: return "peripheral1";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view text) {
  for (Quantity q : {Quantity::Temperature, Quantity::Power, Quantity::Voltage}) {
    if (to_string(q) == text) return q;
  }
  return std::nullopt;
}

std::optional<HostPart> parse_host_part(std::string_view text) {
  for (HostPart p : kAllHostParts) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

}  // namespace lofamo
