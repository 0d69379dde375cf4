// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/registers/temperature.hpp"

#include <algorithm>
#include <string>

#include "lofamo/error.hpp"

namespace lofamo::registers {

std::uint8_t temp_encode(int celsius) {
  if (celsius < kMinCelsius || celsius > kMaxCelsius) {
    throw OutOfRange("temperature " + std::to_string(celsius) + " C outside [-128, 127]");
  }
  return static_cast<std::uint8_t>(celsius + 128);
}

bool Thresholds::sorted() const { return std::is_sorted(bound.begin(), bound.end()); }

namespace {

std::uint8_t raw_byte(int v) {
  if (v < 0 || v > 255) {
    throw OutOfRange("raw sensor boundary " + std::to_string(v) + " outside [0, 255]");
  }
  return static_cast<std::uint8_t>(v);
}

template <typename Enc>
Word pack(const Thresholds& t, Enc enc) {
  Word w = 0;
  for (std::size_t i = 0; i < 4; ++i) w |= static_cast<Word>(enc(t.bound[i])) << (8 * i);
  return w;
}

template <typename Dec>
Thresholds unpack(Word w, Dec dec) {
  Thresholds t;
  for (std::size_t i = 0; i < 4; ++i) {
    t.bound[i] = dec(static_cast<std::uint8_t>((w >> (8 * i)) & 0xffu));
  }
  return t;
}

}  // namespace

Word pack_temperature_thresholds(const Thresholds& t) { return pack(t, temp_encode); }

Thresholds unpack_temperature_thresholds(Word word) {
  return unpack(word, [](std::uint8_t b) { return temp_decode(b); });
}

Word pack_raw_thresholds(const Thresholds& t) { return pack(t, raw_byte); }

Thresholds unpack_raw_thresholds(Word word) {
  return unpack(word, [](std::uint8_t b) { return static_cast<int>(b); });
}

}  // namespace lofamo::registers
