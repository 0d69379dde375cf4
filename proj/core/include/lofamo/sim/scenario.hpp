// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lofamo/error.hpp"
#include "lofamo/network/fault.hpp"
#include "lofamo/node/coord.hpp"
#include "lofamo/node/link_monitor.hpp"
#include "lofamo/node/sensors.hpp"
#include "lofamo/registers/temperature.hpp"
#include "lofamo/time.hpp"

namespace lofamo::sim {

struct Params {
  // The DNP watchdog register is written every dnp_write_period and read by
  // the host every host_read_period; the host register the other way round.
  // Each writer must be faster than its reader.
  Tick dnp_write_period = 5;
  Tick dnp_read_period = 12;
  Tick host_write_period = 5;
  Tick host_read_period = 12;
  int miss_tolerance = 2;

  double link_error_threshold = node::kDefaultErrorThreshold;
  std::size_t link_window = node::kDefaultErrorWindow;
  int link_probe_packets = 32;  // link-level packets received per port per DNP update

  int maxhops = 16;
  Tick heartbeat_period = 50;
  Tick heartbeat_timeout = 150;
  Tick mesh_latency = 1;
  Tick service_latency = 1;

  registers::Thresholds temperature = node::kDefaultTemperatureThresholds;
  registers::Thresholds power = node::kDefaultPowerThresholds;
  registers::Thresholds voltage = node::kDefaultVoltageThresholds;
  node::SensorBlock initial_sensors;

  bool strict_masks = true;

  const registers::Thresholds& thresholds(Quantity q) const;
  Tick max_read_period() const { return std::max(dnp_read_period, host_read_period); }
};

struct Scenario {
  std::string name = "scenario";
  TorusDims dims{2, 2, 2};
  Tick duration = 500;
  std::uint64_t seed = 1;
  Params params;
  std::vector<network::FaultEvent> faults;
};

inline constexpr std::size_t kMaxNodes = 1 << 20;
inline constexpr std::size_t kMaxLinkWindow = 1 << 20;
inline constexpr int kMaxProbePackets = 1 << 16;

struct Violation {
  std::string field;
  std::string message;
};

std::vector<Violation> validate(const Scenario& sc);

class InvalidScenario : public Error {
 public:
  explicit InvalidScenario(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Filesystem failures; the CLI maps these to exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// YAML scenario files. Parsing rejects unknown keys and malformed values
// with Error; semantic checks are left to validate().
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string to_yaml(const Scenario& sc);
void save_scenario(const Scenario& sc, const std::string& path);

}  // namespace lofamo::sim
