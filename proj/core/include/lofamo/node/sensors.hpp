// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lofamo/registers/temperature.hpp"
#include "lofamo/registers/types.hpp"

namespace lofamo::node {

// Zone classification over four sorted boundaries; lower bounds inclusive.
// Throws InvalidThresholds if the boundaries are not sorted.
AlertState classify_sensor(int value, const registers::Thresholds& t);

// Raw sensor readings. Temperature is in degrees C; power and voltage are
// in raw converter units 0..255.
struct SensorBlock {
  int temperature_c = 45;
  int power = 100;
  int voltage = 125;

  int value(Quantity q) const;
  void set(Quantity q, int v);
};

inline constexpr registers::Thresholds kDefaultTemperatureThresholds{{-10, 0, 70, 85}};
inline constexpr registers::Thresholds kDefaultPowerThresholds{{10, 20, 180, 220}};
inline constexpr registers::Thresholds kDefaultVoltageThresholds{{100, 110, 140, 150}};

}  // namespace lofamo::node
