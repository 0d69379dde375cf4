// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/node/dnp_fault_manager.hpp"

#include <algorithm>
#include <string>

#include "lofamo/error.hpp"

namespace lofamo::node {

using registers::HostWatchdogRegister;
using registers::RemoteHostFault;
namespace addr = registers::addr;

namespace {

std::array<LinkMonitor, kDirections> make_links(const DnpConfig& c) {
  return {LinkMonitor(Direction::ZMinus, c.link_error_threshold, c.link_window),
          LinkMonitor(Direction::ZPlus, c.link_error_threshold, c.link_window),
          LinkMonitor(Direction::YMinus, c.link_error_threshold, c.link_window),
          LinkMonitor(Direction::YPlus, c.link_error_threshold, c.link_window),
          LinkMonitor(Direction::XMinus, c.link_error_threshold, c.link_window),
          LinkMonitor(Direction::XPlus, c.link_error_threshold, c.link_window)};
}

// What the neighbours should know about a host, given its latest status.
// Nothing is relayed while the host can still use its own service link.
RemoteHostFault relayable(const HostWatchdogRegister& status) {
  if (status.service_net != TriState::Broken) return {};
  return registers::broken_components(status);
}

int clamp_byte(int v, int lo, int hi) { return std::clamp(v, lo, hi); }

}  // namespace

DnpFaultManager::DnpFaultManager(NodeCoord coord, DnpConfig config)
    : coord_(coord),
      config_(std::move(config)),
      regfile_(config_.strict_masks),
      links_(make_links(config_)) {
  regfile_.write(addr::kMaxHops, config_.maxhops);
  regfile_.write(addr::kTempThresholds, registers::pack_temperature_thresholds(config_.temperature));
  regfile_.write(addr::kPowerThresholds, registers::pack_raw_thresholds(config_.power));
  regfile_.write(addr::kVoltageThresholds, registers::pack_raw_thresholds(config_.voltage));
  write_sensor_registers();
}

CoreStatus DnpFaultManager::core_status() const {
  for (Address a : {addr::kEngineExceptions, addr::kRouterExceptions0, addr::kRouterExceptions1,
                    addr::kRdmaException}) {
    if (regfile_.read(a) != 0) return CoreStatus::Sick;
  }
  return CoreStatus::Normal;
}

void DnpFaultManager::write_sensor_registers() {
  regfile_.write(addr::kTemperature,
                 registers::temp_encode(clamp_byte(sensors_.temperature_c, registers::kMinCelsius,
                                                   registers::kMaxCelsius)));
  regfile_.write(addr::kPower, static_cast<Word>(clamp_byte(sensors_.power, 0, 255)));
  regfile_.write(addr::kVoltage, static_cast<Word>(clamp_byte(sensors_.voltage, 0, 255)));
}

registers::DnpWatchdogRegister DnpFaultManager::current_status() const {
  registers::DnpWatchdogRegister reg;
  reg.valid = true;
  reg.neighbor_host_fail = neighbor_host_fail_;
  reg.core = core_status();
  // Thresholds are programmable, so they are taken from the register file.
  const auto temp_t = registers::unpack_temperature_thresholds(regfile_.read(addr::kTempThresholds));
  const auto power_t = registers::unpack_raw_thresholds(regfile_.read(addr::kPowerThresholds));
  const auto volt_t = registers::unpack_raw_thresholds(regfile_.read(addr::kVoltageThresholds));
  reg.temperature = classify_sensor(registers::temp_decode(static_cast<std::uint8_t>(
                                        regfile_.read(addr::kTemperature))),
                                    temp_t);
  reg.power = classify_sensor(static_cast<int>(regfile_.read(addr::kPower)), power_t);
  reg.voltage = classify_sensor(static_cast<int>(regfile_.read(addr::kVoltage)), volt_t);
  for (Direction d : kAllDirections) reg.link[index(d)] = links_[index(d)].status();
  return reg;
}

void DnpFaultManager::update_watchdog() {
  if (melted_down_) return;
  write_sensor_registers();
  regfile_.write(addr::kDnpWatchdog, registers::encode_dnp_wd(current_status()));
}

HostCheckOutcome DnpFaultManager::check_host() {
  HostCheckOutcome out;
  const Word word = regfile_.read(addr::kHostWatchdog);
  const HostWatchdogRegister status = registers::decode_host_wd(word);
  if (status.valid) {
    regfile_.write(addr::kHostWatchdog, word & ~registers::kValidBit);
    misses_ = 0;
    out.kind = HostCheckOutcome::Kind::Fresh;
    out.status = status;
    const RemoteHostFault want = relayable(status);
    if (host_declared_down_) {
      // Neighbours were told the host is gone; correct them either way.
      host_declared_down_ = false;
      out.relay = true;
    } else if (want != last_relayed_) {
      out.relay = true;
    }
    last_relayed_ = want;
    return out;
  }
  ++misses_;
  out.consecutive_misses = misses_;
  if (misses_ == config_.miss_tolerance) {
    host_declared_down_ = true;
    last_relayed_ = {};
    out.kind = HostCheckOutcome::Kind::HostDeclaredDown;
    out.relay = true;
  } else {
    out.kind = HostCheckOutcome::Kind::Missed;
  }
  return out;
}

std::vector<OutgoingPacket> DnpFaultManager::relay_host_fault(
    const std::optional<HostWatchdogRegister>& detail, Tick now) const {
  network::DiagnosticPacket pkt;
  pkt.src = coord_;
  pkt.timestamp = now;
  if (!detail) {
    pkt.origin = network::DiagnosticOrigin::HostTotalBreakdown;
  } else {
    pkt.detail = relayable(*detail);
    pkt.origin = pkt.detail.any() ? network::DiagnosticOrigin::HostComponentFault
                                  : network::DiagnosticOrigin::AllClear;
  }
  std::vector<OutgoingPacket> out;
  for (Direction d : kAllDirections) {
    if (links_[index(d)].status() != TriState::Broken) out.push_back({d, pkt});
  }
  if (out.empty()) {
    throw NoLiveLinks("dnp " + to_string(coord_) + " has no live link to relay on");
  }
  return out;
}

void DnpFaultManager::receive_diagnostic(Direction arrived_on,
                                         const network::DiagnosticPacket& pkt) {
  const Word maxhops = regfile_.read(addr::kMaxHops);
  if (pkt.hops > maxhops) {
    regfile_.write(addr::kRouterExceptions0,
                   regfile_.read(addr::kRouterExceptions0) | registers::kRouterHopLimitException);
    throw HopLimitExceeded("packet from " + to_string(pkt.src) + " took " +
                           std::to_string(pkt.hops) + " hops, limit " + std::to_string(maxhops));
  }
  const std::size_t d = index(arrived_on);
  switch (pkt.origin) {
    case network::DiagnosticOrigin::HostTotalBreakdown:
      neighbor_host_fail_[d] = true;
      remote_.dir[d] = {};
      break;
    case network::DiagnosticOrigin::HostComponentFault:
      neighbor_host_fail_[d] = true;
      remote_.dir[d] = pkt.detail;
      break;
    case network::DiagnosticOrigin::AllClear:
      neighbor_host_fail_[d] = false;
      remote_.dir[d] = {};
      break;
  }
  // Patch the published registers in place; the valid bit is left alone so
  // the watchdog handshake is not disturbed.
  const Word bit = 1u << (registers::dnp_bits::kHostFail + d);
  Word wd = regfile_.read(addr::kDnpWatchdog);
  wd = neighbor_host_fail_[d] ? (wd | bit) : (wd & ~bit);
  regfile_.write(addr::kDnpWatchdog, wd);
  regfile_.write(addr::kRemoteFault, registers::encode_remote_fault(remote_));
}

}  // namespace lofamo::node
