// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lofamo/network/fault.hpp"
#include "lofamo/sim/scenario.hpp"
#include "lofamo/sim/trace.hpp"
#include "lofamo/supervisor/report.hpp"

namespace lofamo::sim {

// Which agent notices a fault first.
enum class Detector {
  ReceivingLinkSelfTest,  // DNP on the receiving side only
  BothSidesLinkSelfTest,  // DNPs on both ends of the cable
  SingleSideLinkSelfTest, // the surviving end when one side's link logic died
  Sensors,                // DNP fault manager via its sensors
  DnpFm,                  // DNP fault manager via exception registers
  HostWatchdog,           // host, from missed DNP watchdog updates
  HostFm,                 // host fault manager, locally
  DnpWatchdog,            // DNP fault manager, from missed host watchdog updates
};

std::string_view to_string(Detector d);

// The health-map entry a fault should eventually produce.
struct Expectation {
  NodeCoord subject;
  supervisor::Component component;
  supervisor::Status status;
  supervisor::Via via;
};

// Entries implied by a fault; empty for repair/recovery events and for
// sensor moves that stay in the normal zone.
std::vector<Expectation> expected_awareness(const network::FaultEvent& e, TorusDims dims,
                                            const Params& p);

// One row of the fault detection table, instantiated at the centre of the
// torus.
struct FaultRow {
  std::string name;      // scenario name
  std::string table_row; // fault as named in the detection table
  network::FaultEvent fault;
  Detector detector;
  supervisor::Via path;
};

std::vector<FaultRow> fault_table(TorusDims dims);

inline constexpr Tick kMatrixFaultTime = 100;
inline constexpr Tick kMatrixDuration = 600;

Scenario matrix_scenario(const FaultRow& row, TorusDims dims, std::uint64_t seed);
std::vector<Scenario> fault_matrix(TorusDims dims = {3, 3, 3}, std::uint64_t seed = 42);

// Check the trace against a row's detector column. Returns an empty string
// on success, otherwise what was wrong.
std::string check_detector(const FaultRow& row, const Trace& trace);

}  // namespace lofamo::sim
