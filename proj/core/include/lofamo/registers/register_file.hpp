// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "lofamo/registers/types.hpp"

namespace lofamo::registers {

// DNP-VEP register addresses used by the fault manager.
namespace addr {
inline constexpr Address kEngineExceptions = 0x00c0;
inline constexpr Address kMaxHops = 0x0008;
inline constexpr Address kRouterExceptions0 = 0x0140;
inline constexpr Address kRouterExceptions1 = 0x0144;
inline constexpr Address kRdmaException = 0x0240;
inline constexpr Address kChannelXPlus = 0x0440;
inline constexpr Address kChannelXMinus = 0x0540;
inline constexpr Address kChannelYPlus = 0x0640;
inline constexpr Address kChannelYMinus = 0x0740;
inline constexpr Address kChannelZPlus = 0x0840;
inline constexpr Address kChannelZMinus = 0x0940;
inline constexpr Address kDnpWatchdog = 0x0ec0;
inline constexpr Address kHostWatchdog = 0x0ec4;
inline constexpr Address kRemoteFault = 0x0ec8;
inline constexpr Address kTempThresholds = 0x0f00;
inline constexpr Address kTemperature = 0x0f40;
// Not assigned by the hardware map; placed in the free block next to the
// temperature registers.
inline constexpr Address kPowerThresholds = 0x0f10;
inline constexpr Address kVoltageThresholds = 0x0f20;
inline constexpr Address kPower = 0x0f44;
inline constexpr Address kVoltage = 0x0f48;
}  // namespace addr

// Bit in router exception word 0 raised when a packet arrives over the hop
// limit.
inline constexpr Word kRouterHopLimitException = 0x1u;

Address channel_exception_address(Direction d);

struct RegisterInfo {
  Address address;
  Word mask;
  std::string_view name;
};

// The full DNP-VEP fault-detection register map, in ascending address order.
const std::vector<RegisterInfo>& register_map();
const RegisterInfo* find_register(Address a);

// Address-keyed register file. Writes store word & mask; in strict mode a
// word with bits outside the mask is rejected instead.
class RegisterFile {
 public:
  explicit RegisterFile(bool strict_masks = true);

  Word read(Address a) const;          // throws UnmappedAddress
  void write(Address a, Word word);    // throws UnmappedAddress, MaskViolation

  bool strict() const { return strict_; }
  Word mask(Address a) const;

  // Snapshot of every register as (address, value), ascending address.
  std::vector<std::pair<Address, Word>> entries() const;

 private:
  struct Slot {
    Word value = 0;
    Word mask = 0;
  };
  std::map<Address, Slot> slots_;
  bool strict_;
};

// Hex dump: one "aaaaaaaa: vvvvvvvv" line per register.
void write_dump(std::ostream& out, const RegisterFile& rf);
std::vector<std::pair<Address, Word>> parse_dump(std::istream& in);  // throws Error

}  // namespace lofamo::registers
