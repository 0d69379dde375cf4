// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lofamo/network/packet.hpp"
#include "lofamo/node/coord.hpp"
#include "lofamo/rng.hpp"
#include "lofamo/time.hpp"

namespace lofamo::network {

enum class LinkCondition : std::uint8_t { Normal, Sick, Broken };

// One directed edge: traffic leaving a node through one of its six ports.
struct EdgeState {
  LinkCondition condition = LinkCondition::Normal;
  double error_rate = 0.0;  // corruption probability while Sick
  Tick latency = 1;
};

// 3D torus with six directed edges per node. An edge and its reverse fail
// independently; a cable cut takes both down. Link logic is tracked per
// port: a port whose logic is dead no longer runs its self-test.
class TorusTopology {
 public:
  explicit TorusTopology(TorusDims dims, Tick latency = 1);

  TorusDims dims() const { return dims_; }

  const EdgeState& edge(NodeCoord from, Direction d) const;
  EdgeState& edge(NodeCoord from, Direction d);

  // The edge carrying traffic into `at` through port d.
  const EdgeState& inbound(NodeCoord at, Direction d) const;

  void set_sick(NodeCoord from, Direction d, double error_rate);
  void cut_cable(NodeCoord at, Direction d);
  // Kill the link logic of one port. Nothing crosses the cable afterwards,
  // but only the far side can still notice.
  void fail_port(NodeCoord at, Direction d);
  void repair(NodeCoord at, Direction d);

  bool port_alive(NodeCoord at, Direction d) const;
  // RX/TX handshake as seen from port d of `at`.
  bool handshake_alive(NodeCoord at, Direction d) const;

  // Resolve one transmission. Delivered and Corrupted packets have their
  // hop count incremented and arrive at now + latency.
  DeliveryOutcome mesh_send(NodeCoord from, Direction d, DiagnosticPacket& pkt, Tick now,
                            Rng& rng) const;

 private:
  std::size_t slot(NodeCoord c, Direction d) const;

  TorusDims dims_;
  std::vector<EdgeState> edges_;
  std::vector<bool> port_alive_;
};

}  // namespace lofamo::network
