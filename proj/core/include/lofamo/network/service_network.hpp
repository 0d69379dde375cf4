// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lofamo/network/packet.hpp"
#include "lofamo/node/coord.hpp"
#include "lofamo/supervisor/report.hpp"
#include "lofamo/time.hpp"

namespace lofamo::network {

// Star-shaped diagnostic network from every host to the supervisor. Each
// node has one cut switch; while a node's link is up delivery is reliable
// and FIFO with a fixed latency.
class ServiceNetwork {
 public:
  explicit ServiceNetwork(TorusDims dims, Tick latency = 1);

  Tick latency() const { return latency_; }

  bool link_up(NodeCoord n) const;
  void set_link(NodeCoord n, bool up);

  // The caller guarantees the sending host is alive.
  DeliveryOutcome service_send(NodeCoord from, const supervisor::Report& report, Tick now);

  struct LogEntry {
    Tick sent;
    DeliveryOutcome outcome;
    supervisor::Report report;
  };
  const std::vector<LogEntry>& log() const { return log_; }

 private:
  TorusDims dims_;
  Tick latency_;
  std::vector<bool> up_;
  std::vector<LogEntry> log_;
};

}  // namespace lofamo::network
