// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/node/host_fault_manager.hpp"

namespace lofamo::node {

using supervisor::Report;
using supervisor::Via;
namespace addr = registers::addr;
namespace report = supervisor::report;

namespace {

bool part_bit(const registers::RemoteHostFault& f, HostPart p) {
  switch (p) {
    case HostPart::ServiceNet: return f.service_net;
    case HostPart::Memory: return f.memory;
    case HostPart::Peripheral0: return f.peripheral0;
    case HostPart::Peripheral1: return f.peripheral1;
  }
  return false;
}

}  // namespace

HostFaultManager::HostFaultManager(NodeCoord coord, TorusDims dims, HostConfig config)
    : coord_(coord), dims_(dims), config_(config) {
  last_dnp_.valid = true;
}

registers::HostWatchdogRegister HostFaultManager::current_status() const {
  registers::HostWatchdogRegister reg;
  reg.valid = true;
  reg.service_net = component(HostPart::ServiceNet);
  reg.memory = component(HostPart::Memory);
  reg.peripheral0 = component(HostPart::Peripheral0);
  reg.peripheral1 = component(HostPart::Peripheral1);
  return reg;
}

void HostFaultManager::update_watchdog(registers::RegisterFile& rf) const {
  rf.write(addr::kHostWatchdog, registers::encode_host_wd(current_status()));
}

Report HostFaultManager::make(supervisor::ReportBody body, Tick now) const {
  return Report{coord_, coord_, std::move(body), Via::ServiceNet, now};
}

std::vector<Report> HostFaultManager::local_changes(Tick now) {
  std::vector<Report> out;
  for (HostPart p : kAllHostParts) {
    const auto i = static_cast<std::size_t>(p);
    if (parts_[i] != reported_parts_[i]) {
      out.push_back(make(report::HostComponent{p, parts_[i]}, now));
      reported_parts_[i] = parts_[i];
    }
  }
  return out;
}

void HostFaultManager::diff_neighbor(Direction d, const NeighborView& before,
                                     const NeighborView& after, Tick now,
                                     std::vector<Report>& out) const {
  if (before == after) return;
  const NodeCoord subject = neighbor(coord_, d, dims_);
  auto relay = [&](supervisor::ReportBody body) {
    out.push_back(Report{coord_, subject, std::move(body), Via::MeshRelay, now});
  };
  const bool was_down = before.failed && !before.detail.any();
  const bool is_down = after.failed && !after.detail.any();
  if (is_down) {
    relay(report::HostDown{});
    return;
  }
  if (was_down) relay(report::AllClear{supervisor::Component::Host});
  for (HostPart p : kAllHostParts) {
    const bool b = before.failed && part_bit(before.detail, p);
    const bool a = after.failed && part_bit(after.detail, p);
    if (a && !b) relay(report::HostComponent{p, TriState::Broken});
    if (b && !a) relay(report::AllClear{supervisor::host_component(p)});
  }
}

DnpCheckOutcome HostFaultManager::check_dnp(registers::RegisterFile& rf, Tick now) {
  DnpCheckOutcome out;
  const Word word = rf.read(addr::kDnpWatchdog);
  const auto status = registers::decode_dnp_wd(word);
  if (!status.valid) {
    ++misses_;
    out.consecutive_misses = misses_;
    if (misses_ == config_.miss_tolerance) {
      dnp_declared_down_ = true;
      out.kind = DnpCheckOutcome::Kind::DnpDeclaredDown;
      out.reports.push_back(make(report::DnpCoreMeltdown{}, now));
    } else {
      out.kind = DnpCheckOutcome::Kind::Missed;
    }
    return out;
  }

  rf.write(addr::kDnpWatchdog, word & ~registers::kValidBit);
  misses_ = 0;
  out.kind = DnpCheckOutcome::Kind::Fresh;
  out.status = status;
  auto& reports = out.reports;

  if (dnp_declared_down_) {
    dnp_declared_down_ = false;
    reports.push_back(make(report::AllClear{supervisor::Component::DnpCore}, now));
    last_dnp_.core = CoreStatus::Normal;
  }
  for (Direction d : kAllDirections) {
    const auto s = status.link[index(d)];
    if (s != last_dnp_.link[index(d)]) reports.push_back(make(report::LinkStatus{d, s}, now));
  }
  const std::array<std::pair<Quantity, AlertState registers::DnpWatchdogRegister::*>, 3> sensors = {
      {{Quantity::Temperature, &registers::DnpWatchdogRegister::temperature},
       {Quantity::Power, &registers::DnpWatchdogRegister::power},
       {Quantity::Voltage, &registers::DnpWatchdogRegister::voltage}}};
  for (const auto& [q, field] : sensors) {
    if (status.*field != last_dnp_.*field) {
      reports.push_back(make(report::SensorAlert{q, status.*field}, now));
    }
  }
  if (status.core != last_dnp_.core) {
    if (status.core == CoreStatus::Sick) {
      reports.push_back(make(report::DnpCoreSick{}, now));
    } else if (status.core == CoreStatus::Normal) {
      reports.push_back(make(report::AllClear{supervisor::Component::DnpCore}, now));
    }
  }

  const auto remote = registers::decode_remote_fault(rf.read(addr::kRemoteFault));
  for (Direction d : kAllDirections) {
    NeighborView view;
    view.failed = status.neighbor_host_fail[index(d)];
    if (view.failed) view.detail = remote.dir[index(d)];
    diff_neighbor(d, neighbors_[index(d)], view, now, reports);
    neighbors_[index(d)] = view;
  }
  last_dnp_ = status;
  return out;
}

Report HostFaultManager::heartbeat(Tick now) const { return make(report::Heartbeat{}, now); }

}  // namespace lofamo::node
