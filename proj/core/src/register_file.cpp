// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/registers/register_file.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "lofamo/error.hpp"

namespace lofamo::registers {
namespace {

std::string hex8(Word w) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", w);
  return buf;
}

}  // namespace

const std::vector<RegisterInfo>& register_map() {
  static const std::vector<RegisterInfo> kMap = {
      {addr::kMaxHops, 0x000000ffu, "maxhops"},
      {addr::kEngineExceptions, 0x00000fffu, "engine-exceptions"},
      {addr::kRouterExceptions0, 0xffffffffu, "router-exceptions-0"},
      {addr::kRouterExceptions1, 0x00003fffu, "router-exceptions-1"},
      {addr::kRdmaException, 0x000000ffu, "rdma-exception"},
      {addr::kChannelXPlus, 0x000000ffu, "channel-xp-exceptions"},
      {addr::kChannelXMinus, 0x000000ffu, "channel-xm-exceptions"},
      {addr::kChannelYPlus, 0x000000ffu, "channel-yp-exceptions"},
      {addr::kChannelYMinus, 0x000000ffu, "channel-ym-exceptions"},
      {addr::kChannelZPlus, 0x000000ffu, "channel-zp-exceptions"},
      {addr::kChannelZMinus, 0x000000ffu, "channel-zm-exceptions"},
      {addr::kDnpWatchdog, 0x07ffffffu, "dnp-wd"},
      {addr::kHostWatchdog, 0x000001ffu, "host-wd"},
      {addr::kRemoteFault, 0x00ffffffu, "remote-fault"},
      {addr::kTempThresholds, 0xffffffffu, "temp-thresholds"},
      {addr::kPowerThresholds, 0xffffffffu, "power-thresholds"},
      {addr::kVoltageThresholds, 0xffffffffu, "voltage-thresholds"},
      {addr::kTemperature, 0x000000ffu, "temperature"},
      {addr::kPower, 0x000000ffu, "power"},
      {addr::kVoltage, 0x000000ffu, "voltage"},
  };
  return kMap;
}

const RegisterInfo* find_register(Address a) {
  for (const auto& info : register_map()) {
    if (info.address == a) return &info;
  }
  return nullptr;
}

Address channel_exception_address(Direction d) {
  switch (d) {
    case Direction::XPlus: return addr::kChannelXPlus;
    case Direction::XMinus: return addr::kChannelXMinus;
    case Direction::YPlus: return addr::kChannelYPlus;
    case Direction::YMinus: return addr::kChannelYMinus;
    case Direction::ZPlus: return addr::kChannelZPlus;
    case Direction::ZMinus: return addr::kChannelZMinus;
  }
  return addr::kChannelXPlus;
}

RegisterFile::RegisterFile(bool strict_masks) : strict_(strict_masks) {
  for (const auto& info : register_map()) slots_[info.address] = Slot{0, info.mask};
}

Word RegisterFile::read(Address a) const {
  auto it = slots_.find(a);
  if (it == slots_.end()) throw UnmappedAddress("read of unmapped address 0x" + hex8(a));
  return it->second.value;
}

void RegisterFile::write(Address a, Word word) {
  auto it = slots_.find(a);
  if (it == slots_.end()) throw UnmappedAddress("write to unmapped address 0x" + hex8(a));
  Slot& slot = it->second;
  if (strict_ && (word & ~slot.mask) != 0) {
    throw MaskViolation("write of 0x" + hex8(word) + " to 0x" + hex8(a) +
                        " outside mask 0x" + hex8(slot.mask));
  }
  slot.value = word & slot.mask;
}

Word RegisterFile::mask(Address a) const {
  auto it = slots_.find(a);
  if (it == slots_.end()) throw UnmappedAddress("no register at 0x" + hex8(a));
  return it->second.mask;
}

std::vector<std::pair<Address, Word>> RegisterFile::entries() const {
  std::vector<std::pair<Address, Word>> out;
  out.reserve(slots_.size());
  for (const auto& [a, slot] : slots_) out.emplace_back(a, slot.value);
  return out;
}

void write_dump(std::ostream& out, const RegisterFile& rf) {
  for (const auto& [a, w] : rf.entries()) out << hex8(a) << ": " << hex8(w) << '\n';
}

std::vector<std::pair<Address, Word>> parse_dump(std::istream& in) {
  std::vector<std::pair<Address, Word>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line.size() != 18 || line[8] != ':' || line[9] != ' ') {
      throw Error("dump line " + std::to_string(lineno) + ": expected 'aaaaaaaa: vvvvvvvv'");
    }
    auto parse_hex = [&](std::string_view s) {
      Word v = 0;
      for (char c : s) {
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else throw Error("dump line " + std::to_string(lineno) + ": bad hex digit");
        v = (v << 4) | static_cast<Word>(digit);
      }
      return v;
    };
    std::string_view view(line);
    out.emplace_back(parse_hex(view.substr(0, 8)), parse_hex(view.substr(10, 8)));
  }
  return out;
}

}  // namespace lofamo::registers
