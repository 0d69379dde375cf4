// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lofamo/node/coord.hpp"
#include "lofamo/supervisor/report.hpp"
#include "lofamo/time.hpp"

namespace lofamo::supervisor {

struct Provenance {
  NodeCoord reporter;
  Via via = Via::ServiceNet;

  bool operator==(const Provenance&) const = default;
};

struct Entry {
  Status status = Status::Normal;
  Tick time = 0;  // report creation time
  Provenance from;
};

// A write to the health map that changed a component's status.
struct MapUpdate {
  NodeCoord node;
  Component component;
  Status before;
  Status after;
  Provenance from;
  Tick time;
};

struct Inference {
  enum class Kind { NodeDead, SilentNode };
  Kind kind = Kind::SilentNode;
  NodeCoord node;
  Tick last_heartbeat = 0;
  // Neighbour corroboration, e.g. "0,1,1:link.X+=BROKEN@service".
  std::vector<std::string> evidence;
};

std::string_view to_string(Inference::Kind k);

// The supervisor's systemic picture. Conflicting reports about the same
// component resolve latest-timestamp-wins; every report is kept in the
// evidence log regardless.
class HealthMap {
 public:
  HealthMap(TorusDims dims, Tick heartbeat_timeout);

  TorusDims dims() const { return dims_; }
  Tick heartbeat_timeout() const { return heartbeat_timeout_; }

  // Apply a report. Returns the update when a status actually changed.
  std::optional<MapUpdate> ingest(const Report& r);

  // NodeDead(n): no heartbeat for more than heartbeat_timeout and at least
  // one neighbour reports a Broken link toward n or a HostDown about n.
  // SilentNode(n): the timeout alone.
  std::vector<Inference> infer(Tick now) const;

  const Entry* find(NodeCoord n, Component c) const;
  Tick last_heartbeat(NodeCoord n) const;

  // Every non-heartbeat report ever ingested, in arrival order.
  const std::vector<Report>& evidence_log() const { return evidence_; }

  // (node index, component) -> entry, in that order.
  const std::map<std::pair<std::size_t, Component>, Entry>& entries() const { return entries_; }

 private:
  std::vector<std::string> corroboration(NodeCoord n) const;

  TorusDims dims_;
  Tick heartbeat_timeout_;
  std::map<std::pair<std::size_t, Component>, Entry> entries_;
  std::vector<Tick> last_heartbeat_;
  std::vector<Report> evidence_;
};

struct HealthRecord {
  NodeCoord node;
  std::string component;  // a Component name, or "node" for inferences
  std::string status;
  std::string provenance;
  Tick time;
};

// Serialisable view of the map plus the inferences drawn at `time`.
struct SystemHealthReport {
  Tick time = 0;
  std::vector<HealthRecord> records;
  std::vector<Inference> inferences;

  bool all_healthy() const;
  // Header lines start with '#'; each record is
  // "node component status provenance time".
  std::string to_text() const;
};

SystemHealthReport snapshot(const HealthMap& hm, Tick now);

}  // namespace lofamo::supervisor
