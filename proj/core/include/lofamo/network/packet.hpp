// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

#include "lofamo/node/coord.hpp"
#include "lofamo/registers/status_registers.hpp"
#include "lofamo/time.hpp"

namespace lofamo::network {

enum class DiagnosticOrigin : std::uint8_t {
  HostTotalBreakdown,
  HostComponentFault,  // detail names the broken components
  AllClear,
};

std::string_view to_string(DiagnosticOrigin o);

// Host-fault report a DNP pushes to its torus neighbours when its own host
// cannot reach the service network.
struct DiagnosticPacket {
  NodeCoord src;
  DiagnosticOrigin origin = DiagnosticOrigin::HostTotalBreakdown;
  registers::RemoteHostFault detail;
  std::uint32_t hops = 0;
  Tick timestamp = 0;

  bool operator==(const DiagnosticPacket&) const = default;
};

struct DeliveryOutcome {
  enum class Kind : std::uint8_t { Delivered, Corrupted, Dropped };
  Kind kind = Kind::Dropped;
  Tick at = 0;  // arrival time, meaningful for Delivered and Corrupted
};

std::string_view to_string(DeliveryOutcome::Kind k);

}  // namespace lofamo::network
