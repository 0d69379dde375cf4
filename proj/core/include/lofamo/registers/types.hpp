// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lofamo {

using Word = std::uint32_t;
using Address = std::uint32_t;

// Two-bit component status. Code 11 is never produced and never accepted.
enum class TriState : std::uint8_t { Normal = 0, Sick = 1, Broken = 2 };

// Two-bit sensor alert level. Code 11 is never produced and never accepted.
enum class AlertState : std::uint8_t { Normal = 0, Warning = 1, Alarm = 2 };

// DNP core status field. Only Normal and Sick are ever emitted; the 10 code
// decodes without error but carries no assigned meaning. Meltdown is never
// a code: it shows up as a watchdog register that stops being validated.
enum class CoreStatus : std::uint8_t { Normal = 0, Sick = 1, Unassigned = 2 };

// The six torus directions, numbered in register bit order.
enum class Direction : std::uint8_t {
  ZMinus = 0,
  ZPlus = 1,
  YMinus = 2,
  YPlus = 3,
  XMinus = 4,
  XPlus = 5,
};

inline constexpr std::size_t kDirections = 6;

inline constexpr std::array<Direction, kDirections> kAllDirections = {
    Direction::ZMinus, Direction::ZPlus, Direction::YMinus,
    Direction::YPlus,  Direction::XMinus, Direction::XPlus};

enum class Axis : std::uint8_t { X, Y, Z };

constexpr std::size_t index(Direction d) { return static_cast<std::size_t>(d); }

constexpr Direction opposite(Direction d) {
  return static_cast<Direction>(static_cast<std::uint8_t>(d) ^ 1u);
}

constexpr Axis axis(Direction d) {
  switch (index(d) / 2) {
    case 0: return Axis::Z;
    case 1: return Axis::Y;
    default: return Axis::X;
  }
}

constexpr bool is_positive(Direction d) { return (index(d) & 1u) != 0; }

std::string_view to_string(Direction d);
std::string_view to_string(TriState s);
std::string_view to_string(AlertState s);
std::string_view to_string(CoreStatus s);

std::optional<Direction> parse_direction(std::string_view text);
std::optional<TriState> parse_tristate(std::string_view text);

}  // namespace lofamo

namespace lofamo {

// Sensed quantities with an alert field in the DNP watchdog register.
enum class Quantity : std::uint8_t { Temperature, Power, Voltage };

// Host components with a status field in the host watchdog register.
enum class HostPart : std::uint8_t { ServiceNet, Memory, Peripheral0, Peripheral1 };

inline constexpr std::array<HostPart, 4> kAllHostParts = {
    HostPart::ServiceNet, HostPart::Memory, HostPart::Peripheral0, HostPart::Peripheral1};

std::string_view to_string(Quantity q);
std::string_view to_string(HostPart p);
std::optional<Quantity> parse_quantity(std::string_view text);
std::optional<HostPart> parse_host_part(std::string_view text);

}  // namespace lofamo
