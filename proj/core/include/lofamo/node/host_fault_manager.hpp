// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "lofamo/node/coord.hpp"
#include "lofamo/registers/register_file.hpp"
#include "lofamo/registers/status_registers.hpp"
#include "lofamo/supervisor/report.hpp"
#include "lofamo/time.hpp"

namespace lofamo::node {

struct HostConfig {
  Tick write_period = 5;   // host watchdog register update period
  Tick read_period = 12;   // DNP watchdog register check period
  int miss_tolerance = 2;
  Tick heartbeat_period = 50;
};

struct DnpCheckOutcome {
  enum class Kind { Fresh, Missed, DnpDeclaredDown };
  Kind kind = Kind::Missed;
  registers::DnpWatchdogRegister status;  // valid for Fresh
  int consecutive_misses = 0;
  // Reports for the supervisor: status changes, neighbour news, or the
  // meltdown declaration. Empty for a fresh, unchanged status.
  std::vector<supervisor::Report> reports;
};

// The fault manager process on the host. Operates on the register file that
// lives in its companion DNP.
class HostFaultManager {
 public:
  HostFaultManager(NodeCoord coord, TorusDims dims, HostConfig config);

  NodeCoord coord() const { return coord_; }
  const HostConfig& config() const { return config_; }

  TriState component(HostPart p) const { return parts_[static_cast<std::size_t>(p)]; }
  void set_component(HostPart p, TriState s) { parts_[static_cast<std::size_t>(p)] = s; }

  bool broken_down() const { return broken_down_; }
  void break_down() { broken_down_ = true; }
  void recover() { broken_down_ = false; }

  // The host only uses its service link while the link is not Broken.
  bool service_usable() const {
    return !broken_down_ && component(HostPart::ServiceNet) != TriState::Broken;
  }

  registers::HostWatchdogRegister current_status() const;

  // Publish current_status() into the host watchdog register.
  void update_watchdog(registers::RegisterFile& rf) const;

  // Reports for local component statuses that changed since the last call.
  std::vector<supervisor::Report> local_changes(Tick now);

  // Read and invalidate the DNP watchdog register.
  DnpCheckOutcome check_dnp(registers::RegisterFile& rf, Tick now);

  supervisor::Report heartbeat(Tick now) const;

  int consecutive_invalid_reads() const { return misses_; }
  bool dnp_declared_down() const { return dnp_declared_down_; }

 private:
  struct NeighborView {
    bool failed = false;
    registers::RemoteHostFault detail;
    bool operator==(const NeighborView&) const = default;
  };

  supervisor::Report make(supervisor::ReportBody body, Tick now) const;
  void diff_neighbor(Direction d, const NeighborView& before, const NeighborView& after,
                     Tick now, std::vector<supervisor::Report>& out) const;

  NodeCoord coord_;
  TorusDims dims_;
  HostConfig config_;
  std::array<TriState, 4> parts_{};
  std::array<TriState, 4> reported_parts_{};
  bool broken_down_ = false;
  int misses_ = 0;
  bool dnp_declared_down_ = false;
  registers::DnpWatchdogRegister last_dnp_;
  std::array<NeighborView, kDirections> neighbors_{};
};

}  // namespace lofamo::node
