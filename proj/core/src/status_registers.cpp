// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/registers/status_registers.hpp"

#include <string>

#include "lofamo/error.hpp"

namespace lofamo::registers {
namespace {

constexpr Word kTwoBits = 0x3u;

Word put2(Word word, unsigned lo, std::uint8_t code) {
  return word | (static_cast<Word>(code) & kTwoBits) << lo;
}

std::uint8_t take2(Word word, unsigned lo, const std::string& field) {
  auto code = static_cast<std::uint8_t>((word >> lo) & kTwoBits);
  if (code == 3) {
    throw IllegalEncoding(field, field + " field illegal code 11");
  }
  return code;
}

void check_reserved(Word word, Word mask, const char* reg) {
  if ((word & ~mask) != 0) {
    throw IllegalEncoding("reserved", std::string(reg) + " reserved bits set");
  }
}

std::string link_field(Direction d) {
  return "link " + std::string(to_string(d));
}

}  // namespace

std::uint8_t RemoteHostFault::nibble() const {
  return static_cast<std::uint8_t>((service_net ? 1u : 0u) | (memory ? 2u : 0u) |
                                   (peripheral0 ? 4u : 0u) | (peripheral1 ? 8u : 0u));
}

RemoteHostFault RemoteHostFault::from_nibble(std::uint8_t n) {
  return {(n & 1u) != 0, (n & 2u) != 0, (n & 4u) != 0, (n & 8u) != 0};
}

Word encode_dnp_wd(const DnpWatchdogRegister& reg) {
  Word w = reg.valid ? kValidBit : 0u;
  for (Direction d : kAllDirections) {
    if (reg.neighbor_host_fail[index(d)]) w |= 1u << (dnp_bits::kHostFail + index(d));
    w = put2(w, dnp_bits::kLink + 2 * index(d), static_cast<std::uint8_t>(reg.link[index(d)]));
  }
  w = put2(w, dnp_bits::kCore, static_cast<std::uint8_t>(reg.core));
  w = put2(w, dnp_bits::kPower, static_cast<std::uint8_t>(reg.power));
  w = put2(w, dnp_bits::kVoltage, static_cast<std::uint8_t>(reg.voltage));
  w = put2(w, dnp_bits::kTemperature, static_cast<std::uint8_t>(reg.temperature));
  return w;
}

DnpWatchdogRegister decode_dnp_wd(Word word) {
  check_reserved(word, kDnpWdMask, "dnp-wd");
  DnpWatchdogRegister reg;
  reg.valid = (word & kValidBit) != 0;
  for (Direction d : kAllDirections) {
    reg.neighbor_host_fail[index(d)] = ((word >> (dnp_bits::kHostFail + index(d))) & 1u) != 0;
    reg.link[index(d)] =
        static_cast<TriState>(take2(word, dnp_bits::kLink + 2 * index(d), link_field(d)));
  }
  reg.core = static_cast<CoreStatus>(take2(word, dnp_bits::kCore, "core"));
  reg.power = static_cast<AlertState>(take2(word, dnp_bits::kPower, "power"));
  reg.voltage = static_cast<AlertState>(take2(word, dnp_bits::kVoltage, "voltage"));
  reg.temperature = static_cast<AlertState>(take2(word, dnp_bits::kTemperature, "temperature"));
  return reg;
}

Word encode_host_wd(const HostWatchdogRegister& reg) {
  Word w = reg.valid ? kValidBit : 0u;
  w = put2(w, 1, static_cast<std::uint8_t>(reg.service_net));
  w = put2(w, 3, static_cast<std::uint8_t>(reg.memory));
  w = put2(w, 5, static_cast<std::uint8_t>(reg.peripheral0));
  w = put2(w, 7, static_cast<std::uint8_t>(reg.peripheral1));
  return w;
}

HostWatchdogRegister decode_host_wd(Word word) {
  check_reserved(word, kHostWdMask, "host-wd");
  HostWatchdogRegister reg;
  reg.valid = (word & kValidBit) != 0;
  reg.service_net = static_cast<TriState>(take2(word, 1, "service_net"));
  reg.memory = static_cast<TriState>(take2(word, 3, "memory"));
  reg.peripheral0 = static_cast<TriState>(take2(word, 5, "peripheral0"));
  reg.peripheral1 = static_cast<TriState>(take2(word, 7, "peripheral1"));
  return reg;
}

Word encode_remote_fault(const HostRemoteFaultDescriptor& reg) {
  Word w = 0;
  for (Direction d : kAllDirections) {
    w |= static_cast<Word>(reg.dir[index(d)].nibble()) << (4 * index(d));
  }
  return w;
}

HostRemoteFaultDescriptor decode_remote_fault(Word word) {
  check_reserved(word, kRemoteFaultMask, "remote-fault");
  HostRemoteFaultDescriptor reg;
  for (Direction d : kAllDirections) {
    reg.dir[index(d)] = RemoteHostFault::from_nibble(
        static_cast<std::uint8_t>((word >> (4 * index(d))) & 0xfu));
  }
  return reg;
}

RemoteHostFault broken_components(const HostWatchdogRegister& reg) {
  return {reg.service_net == TriState::Broken, reg.memory == TriState::Broken,
          reg.peripheral0 == TriState::Broken, reg.peripheral1 == TriState::Broken};
}

}  // namespace lofamo::registers
