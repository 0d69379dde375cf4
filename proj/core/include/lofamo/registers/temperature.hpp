// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "lofamo/registers/types.hpp"

namespace lofamo::registers {

// The temperature register holds the die temperature with a +128 offset:
// 0x80 is 0 C, 0xE4 is 100 C, 0x3A is -70 C.
inline constexpr int kMinCelsius = -128;
inline constexpr int kMaxCelsius = 127;

std::uint8_t temp_encode(int celsius);  // throws OutOfRange
constexpr int temp_decode(std::uint8_t raw) { return static_cast<int>(raw) - 128; }

// Four zone boundaries b1 <= b2 <= b3 <= b4 for one sensed quantity:
//   value < b1 or value >= b4  -> alarm
//   b1 <= value < b2           -> warning (under)
//   b3 <= value < b4           -> warning (over)
//   b2 <= value < b3           -> normal
struct Thresholds {
  std::array<int, 4> bound{};

  bool sorted() const;
  bool operator==(const Thresholds&) const = default;
};

// Threshold words pack the four byte-encoded boundaries little-endian:
// b1 in bits 0-7 up to b4 in bits 24-31. Temperature boundaries go through
// the temperature byte codec; power and voltage are raw sensor units 0..255.
Word pack_temperature_thresholds(const Thresholds& t);
Thresholds unpack_temperature_thresholds(Word word);
Word pack_raw_thresholds(const Thresholds& t);
Thresholds unpack_raw_thresholds(Word word);

}  // namespace lofamo::registers
