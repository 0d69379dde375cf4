// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/network/packet.hpp"

namespace lofamo::network {

std::string_view to_string(DiagnosticOrigin o) {
  switch (o) {
    case DiagnosticOrigin::HostTotalBreakdown: return "host-breakdown";
    case DiagnosticOrigin::HostComponentFault: return "host-component";
    case DiagnosticOrigin::AllClear: return "all-clear";
  }
  return "?";
}

std::string_view to_string(DeliveryOutcome::Kind k) {
  switch (k) {
    case DeliveryOutcome::Kind::Delivered: return "delivered";
    case DeliveryOutcome::Kind::Corrupted: return "corrupted";
    case DeliveryOutcome::Kind::Dropped: return "dropped";
  }
  return "?";
}

}  // namespace lofamo::network
