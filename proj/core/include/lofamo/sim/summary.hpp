// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lofamo/network/fault.hpp"
#include "lofamo/sim/trace.hpp"

namespace lofamo::sim {

struct FaultAwareness {
  Tick injected = 0;
  std::string kind;
  NodeCoord node;
  std::optional<Tick> latency;  // injection to first matching health-map update
  std::string path;             // "service" or "mesh-relay→service"
};

struct TraceSummary {
  std::size_t faults = 0;
  std::size_t alerts = 0;  // health-map updates to a non-normal status
  std::vector<FaultAwareness> awareness;

  std::string to_text() const;
};

// Throws Error if a fault or map event is missing a field it needs.
TraceSummary summarize(const Trace& trace);

}  // namespace lofamo::sim
