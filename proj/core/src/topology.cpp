// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/network/topology.hpp"

namespace lofamo::network {

TorusTopology::TorusTopology(TorusDims dims, Tick latency)
    : dims_(dims),
      edges_(dims.node_count() * kDirections, EdgeState{LinkCondition::Normal, 0.0, latency}),
      port_alive_(dims.node_count() * kDirections, true) {}

std::size_t TorusTopology::slot(NodeCoord c, Direction d) const {
  return linear_index(c, dims_) * kDirections + index(d);
}

const EdgeState& TorusTopology::edge(NodeCoord from, Direction d) const {
  return edges_[slot(from, d)];
}

EdgeState& TorusTopology::edge(NodeCoord from, Direction d) { return edges_[slot(from, d)]; }

const EdgeState& TorusTopology::inbound(NodeCoord at, Direction d) const {
  return edge(neighbor(at, d, dims_), opposite(d));
}

void TorusTopology::set_sick(NodeCoord from, Direction d, double error_rate) {
  EdgeState& e = edge(from, d);
  if (e.condition == LinkCondition::Broken) return;
  e.condition = LinkCondition::Sick;
  e.error_rate = error_rate;
}

void TorusTopology::cut_cable(NodeCoord at, Direction d) {
  edge(at, d).condition = LinkCondition::Broken;
  edge(neighbor(at, d, dims_), opposite(d)).condition = LinkCondition::Broken;
}

void TorusTopology::fail_port(NodeCoord at, Direction d) {
  port_alive_[slot(at, d)] = false;
  cut_cable(at, d);
}

void TorusTopology::repair(NodeCoord at, Direction d) {
  const NodeCoord far = neighbor(at, d, dims_);
  for (auto [n, dir] : {std::pair{at, d}, std::pair{far, opposite(d)}}) {
    EdgeState& e = edge(n, dir);
    e.condition = LinkCondition::Normal;
    e.error_rate = 0.0;
    port_alive_[slot(n, dir)] = true;
  }
}

bool TorusTopology::port_alive(NodeCoord at, Direction d) const {
  return port_alive_[slot(at, d)];
}

bool TorusTopology::handshake_alive(NodeCoord at, Direction d) const {
  return edge(at, d).condition != LinkCondition::Broken &&
         inbound(at, d).condition != LinkCondition::Broken;
}

DeliveryOutcome TorusTopology::mesh_send(NodeCoord from, Direction d, DiagnosticPacket& pkt,
                                         Tick now, Rng& rng) const {
  const EdgeState& e = edge(from, d);
  if (e.condition == LinkCondition::Broken) return {DeliveryOutcome::Kind::Dropped, now};
  ++pkt.hops;
  const Tick at = now + e.latency;
  if (e.condition == LinkCondition::Sick && rng.bernoulli(e.error_rate)) {
    return {DeliveryOutcome::Kind::Corrupted, at};
  }
  return {DeliveryOutcome::Kind::Delivered, at};
}

}  // namespace lofamo::network
