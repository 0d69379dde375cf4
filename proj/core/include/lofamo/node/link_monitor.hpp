// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lofamo/registers/types.hpp"

namespace lofamo::node {

inline constexpr double kDefaultErrorThreshold = 0.01;
inline constexpr std::size_t kDefaultErrorWindow = 1024;

// Receive-side link self-test. The CRC error ratio is taken over the last
// `window` received packets; the link is Sick once that ratio exceeds the
// threshold and Broken whenever the RX/TX handshake is lost.
class LinkMonitor {
 public:
  explicit LinkMonitor(Direction dir, double error_threshold = kDefaultErrorThreshold,
                       std::size_t window = kDefaultErrorWindow);

  Direction dir() const { return dir_; }

  void record(bool crc_error);
  void set_handshake(bool alive) { handshake_alive_ = alive; }
  void set_threshold(double t) { threshold_ = t; }

  TriState status() const;
  double error_ratio() const;

  bool handshake_alive() const { return handshake_alive_; }
  double threshold() const { return threshold_; }
  std::uint64_t packets_received() const { return packets_received_; }
  std::uint64_t crc_errors() const { return crc_errors_; }
  std::size_t window_packets() const { return filled_; }
  std::size_t window_errors() const { return window_errors_; }

 private:
  Direction dir_;
  double threshold_;
  bool handshake_alive_ = true;
  std::uint64_t packets_received_ = 0;
  std::uint64_t crc_errors_ = 0;
  std::vector<std::uint8_t> ring_;
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
  std::size_t window_errors_ = 0;
};

}  // namespace lofamo::node
