// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lofamo/network/packet.hpp"
#include "lofamo/node/coord.hpp"
#include "lofamo/node/link_monitor.hpp"
#include "lofamo/node/sensors.hpp"
#include "lofamo/registers/register_file.hpp"
#include "lofamo/registers/status_registers.hpp"
#include "lofamo/time.hpp"

namespace lofamo::node {

struct DnpConfig {
  Tick write_period = 5;   // DNP watchdog register update period
  Tick read_period = 12;   // host watchdog register check period
  int miss_tolerance = 2;  // consecutive invalid reads before declaring the host down
  double link_error_threshold = kDefaultErrorThreshold;
  std::size_t link_window = kDefaultErrorWindow;
  std::uint8_t maxhops = 16;
  registers::Thresholds temperature = kDefaultTemperatureThresholds;
  registers::Thresholds power = kDefaultPowerThresholds;
  registers::Thresholds voltage = kDefaultVoltageThresholds;
  bool strict_masks = true;
};

struct HostCheckOutcome {
  enum class Kind { Fresh, Missed, HostDeclaredDown };
  Kind kind = Kind::Missed;
  registers::HostWatchdogRegister status;  // valid for Fresh
  int consecutive_misses = 0;
  // relay_host_fault should run now: with `status` for Fresh, without
  // detail for HostDeclaredDown.
  bool relay = false;
};

struct OutgoingPacket {
  Direction dir;
  network::DiagnosticPacket packet;
};

// The fault manager residing on the DNP. Owns the tile's register file,
// which also holds the host watchdog register written by the host side.
class DnpFaultManager {
 public:
  DnpFaultManager(NodeCoord coord, DnpConfig config);

  NodeCoord coord() const { return coord_; }
  const DnpConfig& config() const { return config_; }

  registers::RegisterFile& regfile() { return regfile_; }
  const registers::RegisterFile& regfile() const { return regfile_; }

  LinkMonitor& link(Direction d) { return links_[index(d)]; }
  const LinkMonitor& link(Direction d) const { return links_[index(d)]; }

  SensorBlock& sensors() { return sensors_; }
  const SensorBlock& sensors() const { return sensors_; }

  bool melted_down() const { return melted_down_; }
  void melt_down() { melted_down_ = true; }

  // Sick as soon as any core exception register is nonzero.
  CoreStatus core_status() const;

  // Status this DNP would publish right now, with valid set.
  registers::DnpWatchdogRegister current_status() const;

  // Publish current_status() into the DNP watchdog register. A melted-down
  // DNP does nothing.
  void update_watchdog();

  // Read and invalidate the host watchdog register.
  HostCheckOutcome check_host();

  // One packet per outgoing link whose monitor is not Broken. No detail
  // means total host breakdown; a detail with no broken component clears a
  // previous report. Throws NoLiveLinks when every link is Broken.
  std::vector<OutgoingPacket> relay_host_fault(
      const std::optional<registers::HostWatchdogRegister>& detail, Tick now) const;

  // Record a neighbour's diagnostic packet that arrived over link `arrived_on`.
  // Throws HopLimitExceeded (and raises the router hop-limit exception) if the
  // packet exceeds the maxhops register.
  void receive_diagnostic(Direction arrived_on, const network::DiagnosticPacket& pkt);

  int consecutive_invalid_reads() const { return misses_; }
  bool host_declared_down() const { return host_declared_down_; }

 private:
  void write_sensor_registers();

  NodeCoord coord_;
  DnpConfig config_;
  registers::RegisterFile regfile_;
  std::array<LinkMonitor, kDirections> links_;
  SensorBlock sensors_;
  std::array<bool, kDirections> neighbor_host_fail_{};
  registers::HostRemoteFaultDescriptor remote_;
  bool melted_down_ = false;
  int misses_ = 0;
  bool host_declared_down_ = false;
  registers::RemoteHostFault last_relayed_;
};

}  // namespace lofamo::node
