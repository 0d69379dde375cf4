// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "lofamo/network/fault.hpp"
#include "lofamo/network/service_network.hpp"
#include "lofamo/network/topology.hpp"
#include "lofamo/node/dnp_fault_manager.hpp"
#include "lofamo/node/host_fault_manager.hpp"
#include "lofamo/rng.hpp"
#include "lofamo/sim/scenario.hpp"
#include "lofamo/sim/trace.hpp"
#include "lofamo/supervisor/health_map.hpp"

namespace lofamo::sim {

struct RunStats {
  std::uint64_t events = 0;
  std::uint64_t host_wd_fresh = 0;   // DNP reads of the host register
  std::uint64_t host_wd_missed = 0;
  std::uint64_t dnp_wd_fresh = 0;    // host reads of the DNP register
  std::uint64_t dnp_wd_missed = 0;
  std::uint64_t host_declared_down = 0;
  std::uint64_t dnp_declared_down = 0;
  std::uint64_t mesh_delivered = 0;
  std::uint64_t mesh_corrupted = 0;
  std::uint64_t mesh_dropped = 0;
  std::uint64_t service_delivered = 0;
  std::uint64_t service_dropped = 0;
  std::uint64_t hop_limit_exceeded = 0;
};

struct RunResult {
  Trace trace;
  supervisor::SystemHealthReport report;
  RunStats stats;
};

// One tile: DNP and host fault managers. The shared watchdog registers
// live in the DNP's register file.
struct Tile {
  node::DnpFaultManager dnp;
  node::HostFaultManager host;
};

// Discrete-event world. Simultaneous events run in (time, entity, kind)
// order, then in scheduling order.
class World {
 public:
  explicit World(const Scenario& sc);  // throws InvalidScenario

  Tick now() const { return now_; }
  const Scenario& scenario() const { return scenario_; }

  // Process every event with time <= end.
  void run_until(Tick end);
  void run() { run_until(scenario_.duration); }

  // Apply a fault right now. Throws UnknownTarget for a node outside the
  // torus and Error for an event in the past.
  void inject(const network::FaultEvent& e);

  Tile& tile(NodeCoord n) { return tiles_[linear_index(n, scenario_.dims)]; }
  const Tile& tile(NodeCoord n) const { return tiles_[linear_index(n, scenario_.dims)]; }
  network::TorusTopology& topology() { return topology_; }
  network::ServiceNetwork& service() { return service_; }
  const supervisor::HealthMap& health_map() const { return health_; }
  const Trace& trace() const { return trace_; }
  const RunStats& stats() const { return stats_; }

  // Final snapshot; also traces the inferences drawn at now().
  RunResult finish();

 private:
  enum class Kind : std::uint8_t {
    Fault,
    MeshArrival,
    ServiceArrival,
    DnpUpdate,
    DnpCheck,
    HostUpdate,
    HostCheck,
    Heartbeat,
  };
  struct MeshArrival {
    std::size_t node;
    Direction arrived_on;
    network::DiagnosticPacket packet;
    bool corrupted;
  };
  using Payload =
      std::variant<std::size_t, network::FaultEvent, MeshArrival, supervisor::Report>;
  struct Event {
    Tick time;
    std::uint32_t entity;
    Kind kind;
    std::uint64_t seq;
    Payload payload;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const;
  };
  struct Ramp {
    Quantity quantity;
    int from;
    int to;
    Tick start;
    Tick end;
  };

  static std::uint32_t dnp_entity(std::size_t i) { return static_cast<std::uint32_t>(1 + 2 * i); }
  static std::uint32_t host_entity(std::size_t i) { return static_cast<std::uint32_t>(2 + 2 * i); }
  std::string dnp_name(std::size_t i) const;
  std::string host_name(std::size_t i) const;

  void schedule(Tick t, std::uint32_t entity, Kind kind, Payload payload);
  void dispatch(Event& ev);

  void on_dnp_update(std::size_t i);
  void on_dnp_check(std::size_t i);
  void on_host_update(std::size_t i);
  void on_host_check(std::size_t i);
  void on_heartbeat(std::size_t i);
  void on_mesh_arrival(const MeshArrival& m);
  void on_service_arrival(const supervisor::Report& r);

  void sample_links(std::size_t i);
  void apply_ramps(std::size_t i);
  void relay(std::size_t i, const std::optional<registers::HostWatchdogRegister>& detail);
  void send_report(std::size_t i, const supervisor::Report& r);
  void trace_dnp_changes(std::size_t i, const registers::DnpWatchdogRegister& before,
                         const registers::DnpWatchdogRegister& after);

  Scenario scenario_;
  Rng rng_;
  network::TorusTopology topology_;
  network::ServiceNetwork service_;
  supervisor::HealthMap health_;
  std::vector<Tile> tiles_;
  std::vector<registers::DnpWatchdogRegister> published_;
  std::vector<std::vector<Ramp>> ramps_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::uint64_t seq_ = 0;
  Tick now_ = 0;
  Trace trace_;
  RunStats stats_;
};

// Validate, build, run to the scenario duration and snapshot.
RunResult run(const Scenario& sc);

}  // namespace lofamo::sim
