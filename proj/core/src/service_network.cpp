// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/network/service_network.hpp"

namespace lofamo::network {

ServiceNetwork::ServiceNetwork(TorusDims dims, Tick latency)
    : dims_(dims), latency_(latency), up_(dims.node_count(), true) {}

bool ServiceNetwork::link_up(NodeCoord n) const { return up_[linear_index(n, dims_)]; }

void ServiceNetwork::set_link(NodeCoord n, bool up) { up_[linear_index(n, dims_)] = up; }

DeliveryOutcome ServiceNetwork::service_send(NodeCoord from, const supervisor::Report& report,
                                             Tick now) {
  DeliveryOutcome outcome{DeliveryOutcome::Kind::Dropped, now};
  if (link_up(from)) outcome = {DeliveryOutcome::Kind::Delivered, now + latency_};
  log_.push_back({now, outcome, report});
  return outcome;
}

}  // namespace lofamo::network
