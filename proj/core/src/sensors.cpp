// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/node/sensors.hpp"

#include "lofamo/error.hpp"

namespace lofamo::node {

AlertState classify_sensor(int value, const registers::Thresholds& t) {
  if (!t.sorted()) throw InvalidThresholds("sensor boundaries must be non-decreasing");
  const auto& b = t.bound;
  if (value < b[0] || value >= b[3]) return AlertState::Alarm;
  if (value < b[1] || value >= b[2]) return AlertState::Warning;
  return AlertState::Normal;
}

int SensorBlock::value(Quantity q) const {
  switch (q) {
    case Quantity::Temperature: return temperature_c;
    case Quantity::Power: return power;
    case Quantity::Voltage: return voltage;
  }
  return 0;
}

void SensorBlock::set(Quantity q, int v) {
  switch (q) {
    case Quantity::Temperature: temperature_c = v; break;
    case Quantity::Power: power = v; break;
    case Quantity::Voltage: voltage = v; break;
  }
}

}  // namespace lofamo::node
