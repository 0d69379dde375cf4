// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/node/link_monitor.hpp"

#include <algorithm>

namespace lofamo::node {

LinkMonitor::LinkMonitor(Direction dir, double error_threshold, std::size_t window)
    : dir_(dir), threshold_(error_threshold), ring_(std::max<std::size_t>(window, 1), 0) {}

void LinkMonitor::record(bool crc_error) {
  ++packets_received_;
  if (crc_error) ++crc_errors_;
  if (filled_ == ring_.size()) {
    window_errors_ -= ring_[head_];
  } else {
    ++filled_;
  }
  ring_[head_] = crc_error ? 1 : 0;
  window_errors_ += ring_[head_];
  head_ = (head_ + 1) % ring_.size();
}

double LinkMonitor::error_ratio() const {
  return static_cast<double>(window_errors_) /
         static_cast<double>(std::max<std::size_t>(filled_, 1));
}

TriState LinkMonitor::status() const {
  if (!handshake_alive_) return TriState::Broken;
  if (error_ratio() > threshold_) return TriState::Sick;
  return TriState::Normal;
}

}  // namespace lofamo::node
