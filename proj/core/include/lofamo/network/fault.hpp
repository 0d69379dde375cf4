// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lofamo/node/coord.hpp"
#include "lofamo/registers/types.hpp"
#include "lofamo/time.hpp"

namespace lofamo::network {

enum class FaultKind : std::uint8_t {
  LinkSick,            // edge (node, dir) corrupts packets with error_rate
  LinkBroken,          // cable (node, dir) cut: both sides lose the handshake
  LinkLogicFailure,    // link logic of port (node, dir) dies: far side notices
  LinkRepair,          // cable (node, dir) back to Normal
  Sensor,              // sensor `quantity` moves to `value` over `ramp` ticks
  CoreSick,            // a DNP core exception register is raised
  CoreMeltdown,        // DNP stops working entirely, links included
  HostComponent,       // host component `part` becomes `status`
  HostBreakdown,       // host (or its bus) stops: no updates, no sends
  HostRecover,
  ServiceLinkCut,      // node's service network link goes down
  ServiceLinkRestore,
  NodeKill,            // host breakdown and core meltdown together
};

std::string_view to_string(FaultKind k);
std::optional<FaultKind> parse_fault_kind(std::string_view text);

struct FaultEvent {
  Tick time = 0;
  FaultKind kind = FaultKind::LinkBroken;
  NodeCoord node;
  Direction dir = Direction::XPlus;
  double error_rate = 0.0;
  Quantity quantity = Quantity::Temperature;
  int value = 0;
  Tick ramp = 0;
  HostPart part = HostPart::Memory;
  TriState status = TriState::Broken;

  bool operator==(const FaultEvent&) const = default;
};

// "kind=link-sick node=1,0,0 dir=X+ error_rate=0.25" style payload, only
// with the parameters the kind uses.
std::string describe(const FaultEvent& e);

bool uses_direction(FaultKind k);

}  // namespace lofamo::network
