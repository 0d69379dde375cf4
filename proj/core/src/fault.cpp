// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/network/fault.hpp"

#include <array>
#include <cstdio>

namespace lofamo::network {
namespace {

constexpr std::array<std::string_view, 13> kNames = {
    "link-sick",   "link-broken",    "link-logic-failure", "link-repair",
    "sensor",      "core-sick",      "core-meltdown",      "host-component",
    "host-breakdown", "host-recover", "service-link-cut",  "service-link-restore",
    "node-kill"};

}  // namespace

std::string_view to_string(FaultKind k) { return kNames[static_cast<std::size_t>(k)]; }

std::optional<FaultKind> parse_fault_kind(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<FaultKind>(i);
  }
  return std::nullopt;
}

bool uses_direction(FaultKind k) {
  return k == FaultKind::LinkSick || k == FaultKind::LinkBroken ||
         k == FaultKind::LinkLogicFailure || k == FaultKind::LinkRepair;
}

std::string describe(const FaultEvent& e) {
  std::string s = "kind=" + std::string(to_string(e.kind)) + " node=" + to_string(e.node);
  if (uses_direction(e.kind)) s += " dir=" + std::string(to_string(e.dir));
  switch (e.kind) {
    case FaultKind::LinkSick: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", e.error_rate);
      s += " error_rate=" + std::string(buf);
      break;
    }
    case FaultKind::Sensor:
      s += " quantity=" + std::string(to_string(e.quantity)) + " value=" +
           std::to_string(e.value) + " ramp=" + std::to_string(e.ramp);
      break;
    case FaultKind::HostComponent:
      s += " part=" + std::string(to_string(e.part)) + " status=" + std::string(to_string(e.status));
      break;
    default:
      break;
  }
  return s;
}

}  // namespace lofamo::network
