// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "lofamo/registers/types.hpp"

namespace lofamo::registers {

inline constexpr Word kDnpWdMask = 0x07ffffffu;
inline constexpr Word kHostWdMask = 0x000001ffu;
inline constexpr Word kRemoteFaultMask = 0x00ffffffu;

inline constexpr Word kValidBit = 0x1u;

// DNP local/global watchdog register.
//
//   bit 0       valid
//   bits 1-6    neighbour host fails, Z- Z+ Y- Y+ X- X+
//   bits 7-8    DNP core status
//   bits 9-10   power alert
//   bits 11-12  voltage alert
//   bits 13-14  temperature alert
//   bits 15-26  link status, two bits each, Z- Z+ Y- Y+ X- X+
//   bits 27-31  zero
struct DnpWatchdogRegister {
  bool valid = false;
  std::array<bool, kDirections> neighbor_host_fail{};
  CoreStatus core = CoreStatus::Normal;
  AlertState power = AlertState::Normal;
  AlertState voltage = AlertState::Normal;
  AlertState temperature = AlertState::Normal;
  std::array<TriState, kDirections> link{};

  bool operator==(const DnpWatchdogRegister&) const = default;
};

// Host watchdog register: valid bit plus four two-bit component statuses.
struct HostWatchdogRegister {
  bool valid = false;
  TriState service_net = TriState::Normal;
  TriState memory = TriState::Normal;
  TriState peripheral0 = TriState::Normal;
  TriState peripheral1 = TriState::Normal;

  bool operator==(const HostWatchdogRegister&) const = default;
};

// One direction's nibble of the remote fault descriptor (1 = broken).
struct RemoteHostFault {
  bool service_net = false;
  bool memory = false;
  bool peripheral0 = false;
  bool peripheral1 = false;

  bool any() const { return service_net || memory || peripheral0 || peripheral1; }
  std::uint8_t nibble() const;
  static RemoteHostFault from_nibble(std::uint8_t n);

  bool operator==(const RemoteHostFault&) const = default;
};

// Host remote fault descriptor: nibble d (bits 4d..4d+3) describes the host
// in direction d.
struct HostRemoteFaultDescriptor {
  std::array<RemoteHostFault, kDirections> dir{};

  bool operator==(const HostRemoteFaultDescriptor&) const = default;
};

Word encode_dnp_wd(const DnpWatchdogRegister& reg);
DnpWatchdogRegister decode_dnp_wd(Word word);

Word encode_host_wd(const HostWatchdogRegister& reg);
HostWatchdogRegister decode_host_wd(Word word);

Word encode_remote_fault(const HostRemoteFaultDescriptor& reg);
HostRemoteFaultDescriptor decode_remote_fault(Word word);

// Broken components of a host watchdog status, as a remote fault nibble.
RemoteHostFault broken_components(const HostWatchdogRegister& reg);

// Field positions, exposed for tooling and bit-level tests.
namespace dnp_bits {
inline constexpr unsigned kHostFail = 1;     // + direction index
inline constexpr unsigned kCore = 7;
inline constexpr unsigned kPower = 9;
inline constexpr unsigned kVoltage = 11;
inline constexpr unsigned kTemperature = 13;
inline constexpr unsigned kLink = 15;        // + 2 * direction index
}  // namespace dnp_bits

}  // namespace lofamo::registers
