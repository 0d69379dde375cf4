// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/sim/world.hpp"

#include <algorithm>
#include <cstdio>

#include "lofamo/error.hpp"

namespace lofamo::sim {

using network::FaultKind;
using supervisor::Report;

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string str(std::string_view s) { return std::string(s); }

Fields describe_payload(const network::FaultEvent& e) {
  Fields out;
  const std::string text = network::describe(e);
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(' ', start);
    if (end == std::string::npos) end = text.size();
    const std::string kv = text.substr(start, end - start);
    const auto eq = kv.find('=');
    out.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    start = end + 1;
  }
  return out;
}

node::DnpConfig dnp_config(const Params& p) {
  node::DnpConfig c;
  c.write_period = p.dnp_write_period;
  c.read_period = p.dnp_read_period;
  c.miss_tolerance = p.miss_tolerance;
  c.link_error_threshold = p.link_error_threshold;
  c.link_window = p.link_window;
  c.maxhops = static_cast<std::uint8_t>(p.maxhops);
  c.temperature = p.temperature;
  c.power = p.power;
  c.voltage = p.voltage;
  c.strict_masks = p.strict_masks;
  return c;
}

node::HostConfig host_config(const Params& p) {
  return {p.host_write_period, p.host_read_period, p.miss_tolerance,
          p.heartbeat_period};
}

const Scenario& checked(const Scenario& sc) {
  if (auto v = validate(sc); !v.empty()) throw InvalidScenario(std::move(v));
  return sc;
}

}  // namespace

bool World::Later::operator()(const Event& a, const Event& b) const {
  if (a.time != b.time) return a.time > b.time;
  if (a.entity != b.entity) return a.entity > b.entity;
  if (a.kind != b.kind) return a.kind > b.kind;
  return a.seq > b.seq;
}

World::World(const Scenario& sc)
    : scenario_(checked(sc)),
      rng_(sc.seed),
      topology_(sc.dims, sc.params.mesh_latency),
      service_(sc.dims, sc.params.service_latency),
      health_(sc.dims, sc.params.heartbeat_timeout) {
  const Params& p = scenario_.params;
  const std::size_t n = scenario_.dims.node_count();
  trace_.dims = scenario_.dims;
  trace_.seed = scenario_.seed;
  tiles_.reserve(n);
  ramps_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeCoord c = coord_at(i, scenario_.dims);
    tiles_.push_back(Tile{node::DnpFaultManager(c, dnp_config(p)),
                          node::HostFaultManager(c, scenario_.dims, host_config(p))});
    tiles_.back().dnp.sensors() = p.initial_sensors;
    published_.push_back(tiles_.back().dnp.current_status());
  }
  // Each agent runs on its own clock: a random phase within its period.
  for (std::size_t i = 0; i < n; ++i) {
    const Tick dnp_write = static_cast<Tick>(rng_.below(p.dnp_write_period));
    const Tick dnp_read = static_cast<Tick>(rng_.below(p.dnp_read_period));
    const Tick host_write = static_cast<Tick>(rng_.below(p.host_write_period));
    const Tick host_read = static_cast<Tick>(rng_.below(p.host_read_period));
    const Tick beat = static_cast<Tick>(rng_.below(p.heartbeat_period));
    schedule(dnp_write, dnp_entity(i), Kind::DnpUpdate, i);
    schedule(dnp_read + p.dnp_read_period, dnp_entity(i), Kind::DnpCheck, i);
    schedule(host_write, host_entity(i), Kind::HostUpdate, i);
    schedule(host_read + p.host_read_period, host_entity(i), Kind::HostCheck, i);
    schedule(beat, host_entity(i), Kind::Heartbeat, i);
  }
  for (const auto& f : scenario_.faults) schedule(f.time, 0, Kind::Fault, f);
}

std::string World::dnp_name(std::size_t i) const {
  return "dnp@" + to_string(coord_at(i, scenario_.dims));
}

std::string World::host_name(std::size_t i) const {
  return "host@" + to_string(coord_at(i, scenario_.dims));
}

void World::schedule(Tick t, std::uint32_t entity, Kind kind, Payload payload) {
  queue_.push(Event{t, entity, kind, seq_++, std::move(payload)});
}

void World::run_until(Tick end) {
  while (!queue_.empty() && queue_.top().time <= end) {
    Event ev = queue_.top();
    queue_.pop();
    now_ = ev.time;
    ++stats_.events;
    dispatch(ev);
  }
  now_ = std::max(now_, end);
}

void World::dispatch(Event& ev) {
  switch (ev.kind) {
    case Kind::Fault: inject(std::get<network::FaultEvent>(ev.payload)); break;
    case Kind::MeshArrival: on_mesh_arrival(std::get<MeshArrival>(ev.payload)); break;
    case Kind::ServiceArrival: on_service_arrival(std::get<Report>(ev.payload)); break;
    case Kind::DnpUpdate: on_dnp_update(std::get<std::size_t>(ev.payload)); break;
    case Kind::DnpCheck: on_dnp_check(std::get<std::size_t>(ev.payload)); break;
    case Kind::HostUpdate: on_host_update(std::get<std::size_t>(ev.payload)); break;
    case Kind::HostCheck: on_host_check(std::get<std::size_t>(ev.payload)); break;
    case Kind::Heartbeat: on_heartbeat(std::get<std::size_t>(ev.payload)); break;
  }
}

void World::inject(const network::FaultEvent& e) {
  if (!scenario_.dims.contains(e.node)) {
    throw UnknownTarget("no node at " + to_string(e.node));
  }
  if (e.time < now_) {
    throw Error("fault at " + std::to_string(e.time) + " is in the past (now " +
                std::to_string(now_) + ")");
  }
  trace_.emit(now_, "injector", "fault", describe_payload(e));
  const std::size_t i = linear_index(e.node, scenario_.dims);
  Tile& t = tiles_[i];
  switch (e.kind) {
    case FaultKind::LinkSick: topology_.set_sick(e.node, e.dir, e.error_rate); break;
    case FaultKind::LinkBroken: topology_.cut_cable(e.node, e.dir); break;
    case FaultKind::LinkLogicFailure: topology_.fail_port(e.node, e.dir); break;
    case FaultKind::LinkRepair: topology_.repair(e.node, e.dir); break;
    case FaultKind::Sensor:
      if (e.ramp == 0) {
        t.dnp.sensors().set(e.quantity, e.value);
      } else {
        ramps_[i].push_back(
            {e.quantity, t.dnp.sensors().value(e.quantity), e.value, now_, now_ + e.ramp});
      }
      break;
    case FaultKind::CoreSick:
      t.dnp.regfile().write(registers::addr::kEngineExceptions, 1);
      break;
    case FaultKind::NodeKill:
      t.host.break_down();
      [[fallthrough]];
    case FaultKind::CoreMeltdown:
      t.dnp.melt_down();
      for (Direction d : kAllDirections) topology_.fail_port(e.node, d);
      break;
    case FaultKind::HostComponent: t.host.set_component(e.part, e.status); break;
    case FaultKind::HostBreakdown: t.host.break_down(); break;
    case FaultKind::HostRecover: t.host.recover(); break;
    case FaultKind::ServiceLinkCut:
      service_.set_link(e.node, false);
      t.host.set_component(HostPart::ServiceNet, TriState::Broken);
      break;
    case FaultKind::ServiceLinkRestore:
      service_.set_link(e.node, true);
      t.host.set_component(HostPart::ServiceNet, TriState::Normal);
      break;
  }
}

void World::apply_ramps(std::size_t i) {
  auto& ramps = ramps_[i];
  auto& sensors = tiles_[i].dnp.sensors();
  for (const Ramp& r : ramps) {
    if (now_ >= r.end) {
      sensors.set(r.quantity, r.to);
    } else {
      const auto span = static_cast<double>(r.end - r.start);
      const auto done = static_cast<double>(now_ - r.start);
      sensors.set(r.quantity, r.from + static_cast<int>((r.to - r.from) * done / span));
    }
  }
  std::erase_if(ramps, [&](const Ramp& r) { return now_ >= r.end; });
}

void World::sample_links(std::size_t i) {
  const NodeCoord c = coord_at(i, scenario_.dims);
  auto& dnp = tiles_[i].dnp;
  const int probes = scenario_.params.link_probe_packets;
  for (Direction d : kAllDirections) {
    // A port whose link logic died stops updating its own status.
    if (!topology_.port_alive(c, d)) continue;
    auto& mon = dnp.link(d);
    mon.set_handshake(topology_.handshake_alive(c, d));
    if (!mon.handshake_alive()) continue;
    const auto& in = topology_.inbound(c, d);
    const bool sick = in.condition == network::LinkCondition::Sick;
    for (int k = 0; k < probes; ++k) mon.record(sick && rng_.bernoulli(in.error_rate));
  }
}

void World::trace_dnp_changes(std::size_t i, const registers::DnpWatchdogRegister& before,
                              const registers::DnpWatchdogRegister& after) {
  auto detect = [&](std::string what, std::string_view status) {
    trace_.emit(now_, dnp_name(i), "detect", {{"what", std::move(what)}, {"status", str(status)}});
  };
  for (Direction d : kAllDirections) {
    const auto k = index(d);
    if (before.link[k] != after.link[k]) {
      detect("link." + str(to_string(d)), to_string(after.link[k]));
    }
  }
  if (before.temperature != after.temperature) detect("temperature", to_string(after.temperature));
  if (before.power != after.power) detect("power", to_string(after.power));
  if (before.voltage != after.voltage) detect("voltage", to_string(after.voltage));
  if (before.core != after.core) detect("dnp.core", to_string(after.core));
}

void World::on_dnp_update(std::size_t i) {
  schedule(now_ + scenario_.params.dnp_write_period, dnp_entity(i), Kind::DnpUpdate, i);
  auto& dnp = tiles_[i].dnp;
  if (dnp.melted_down()) return;
  apply_ramps(i);
  sample_links(i);
  dnp.update_watchdog();
  const auto after = dnp.current_status();
  trace_dnp_changes(i, published_[i], after);
  published_[i] = after;
}

void World::on_dnp_check(std::size_t i) {
  schedule(now_ + scenario_.params.dnp_read_period, dnp_entity(i), Kind::DnpCheck, i);
  auto& dnp = tiles_[i].dnp;
  if (dnp.melted_down()) return;
  const auto out = dnp.check_host();
  using K = node::HostCheckOutcome::Kind;
  switch (out.kind) {
    case K::Fresh:
      ++stats_.host_wd_fresh;
      if (out.relay) relay(i, out.status);
      break;
    case K::Missed:
      ++stats_.host_wd_missed;
      if (out.consecutive_misses < scenario_.params.miss_tolerance) {
        trace_.emit(now_, dnp_name(i), "wd-miss",
                    {{"misses", std::to_string(out.consecutive_misses)}});
      }
      break;
    case K::HostDeclaredDown:
      ++stats_.host_wd_missed;
      ++stats_.host_declared_down;
      trace_.emit(now_, dnp_name(i), "declare",
                  {{"what", "host-down"}, {"misses", std::to_string(out.consecutive_misses)}});
      relay(i, std::nullopt);
      break;
  }
}

void World::relay(std::size_t i, const std::optional<registers::HostWatchdogRegister>& detail) {
  const NodeCoord c = coord_at(i, scenario_.dims);
  std::vector<node::OutgoingPacket> packets;
  try {
    packets = tiles_[i].dnp.relay_host_fault(detail, now_);
  } catch (const NoLiveLinks&) {
    trace_.emit(now_, dnp_name(i), "relay-failed", {{"reason", "no-live-links"}});
    return;
  }
  trace_.emit(now_, dnp_name(i), "relay",
              {{"origin", str(to_string(packets.front().packet.origin))},
               {"links", std::to_string(packets.size())}});
  for (auto& [dir, pkt] : packets) {
    const auto out = topology_.mesh_send(c, dir, pkt, now_, rng_);
    trace_.emit(now_, dnp_name(i), "mesh",
                {{"dir", str(to_string(dir))}, {"outcome", str(to_string(out.kind))}});
    if (out.kind == network::DeliveryOutcome::Kind::Dropped) {
      ++stats_.mesh_dropped;
      continue;
    }
    const std::size_t to = linear_index(neighbor(c, dir, scenario_.dims), scenario_.dims);
    schedule(out.at, dnp_entity(to), Kind::MeshArrival,
             MeshArrival{to, opposite(dir), pkt,
                         out.kind == network::DeliveryOutcome::Kind::Corrupted});
  }
}

void World::on_mesh_arrival(const MeshArrival& m) {
  auto& dnp = tiles_[m.node].dnp;
  if (dnp.melted_down()) return;
  const std::string from = to_string(m.packet.src);
  if (m.corrupted) {
    ++stats_.mesh_corrupted;
    dnp.link(m.arrived_on).record(true);
    trace_.emit(now_, dnp_name(m.node), "diag-corrupt",
                {{"from", from}, {"dir", str(to_string(m.arrived_on))}});
    return;
  }
  dnp.link(m.arrived_on).record(false);
  try {
    dnp.receive_diagnostic(m.arrived_on, m.packet);
    ++stats_.mesh_delivered;
    trace_.emit(now_, dnp_name(m.node), "diag-rx",
                {{"from", from},
                 {"dir", str(to_string(m.arrived_on))},
                 {"origin", str(to_string(m.packet.origin))}});
  } catch (const HopLimitExceeded&) {
    ++stats_.hop_limit_exceeded;
    trace_.emit(now_, dnp_name(m.node), "hop-limit",
                {{"from", from}, {"hops", std::to_string(m.packet.hops)}});
  }
}

void World::on_host_update(std::size_t i) {
  schedule(now_ + scenario_.params.host_write_period, host_entity(i), Kind::HostUpdate, i);
  auto& t = tiles_[i];
  if (t.host.broken_down()) return;
  t.host.update_watchdog(t.dnp.regfile());
  for (const Report& r : t.host.local_changes(now_)) {
    const auto eff = supervisor::effect(r);
    trace_.emit(now_, host_name(i), "detect",
                {{"what", str(supervisor::to_string(eff->first))},
                 {"status", str(supervisor::to_string(eff->second))}});
    send_report(i, r);
  }
}

void World::on_host_check(std::size_t i) {
  schedule(now_ + scenario_.params.host_read_period, host_entity(i), Kind::HostCheck, i);
  auto& t = tiles_[i];
  if (t.host.broken_down()) return;
  auto out = t.host.check_dnp(t.dnp.regfile(), now_);
  using K = node::DnpCheckOutcome::Kind;
  switch (out.kind) {
    case K::Fresh: ++stats_.dnp_wd_fresh; break;
    case K::Missed:
      ++stats_.dnp_wd_missed;
      if (out.consecutive_misses < scenario_.params.miss_tolerance) {
        trace_.emit(now_, host_name(i), "wd-miss",
                    {{"misses", std::to_string(out.consecutive_misses)}});
      }
      break;
    case K::DnpDeclaredDown:
      ++stats_.dnp_wd_missed;
      ++stats_.dnp_declared_down;
      trace_.emit(now_, host_name(i), "declare",
                  {{"what", "dnp-meltdown"}, {"misses", std::to_string(out.consecutive_misses)}});
      break;
  }
  for (const Report& r : out.reports) send_report(i, r);
}

void World::on_heartbeat(std::size_t i) {
  schedule(now_ + scenario_.params.heartbeat_period, host_entity(i), Kind::Heartbeat, i);
  auto& host = tiles_[i].host;
  if (host.broken_down()) return;
  const NodeCoord c = coord_at(i, scenario_.dims);
  if (!host.service_usable() || !service_.link_up(c)) {
    trace_.emit(now_, host_name(i), "heartbeat-dropped");
    return;
  }
  const auto out = service_.service_send(c, host.heartbeat(now_), now_);
  trace_.emit(now_, host_name(i), "heartbeat");
  schedule(out.at, 0, Kind::ServiceArrival, host.heartbeat(now_));
}

void World::send_report(std::size_t i, const Report& r) {
  const NodeCoord c = coord_at(i, scenario_.dims);
  Fields p = {{"report", str(supervisor::kind_name(r))},
               {"subject", to_string(r.subject)},
               {"via", str(supervisor::to_string(r.via))}};
  if (const auto eff = supervisor::effect(r)) {
    p.emplace_back("component", str(supervisor::to_string(eff->first)));
    p.emplace_back("status", str(supervisor::to_string(eff->second)));
  }
  if (!tiles_[i].host.service_usable() || !service_.link_up(c)) {
    ++stats_.service_dropped;
    trace_.emit(now_, host_name(i), "report-dropped", std::move(p));
    return;
  }
  const auto out = service_.service_send(c, r, now_);
  ++stats_.service_delivered;
  trace_.emit(now_, host_name(i), "report", std::move(p));
  schedule(out.at, 0, Kind::ServiceArrival, r);
}

void World::on_service_arrival(const Report& r) {
  const auto upd = health_.ingest(r);
  if (!upd) return;
  trace_.emit(now_, "supervisor", "map",
              {{"node", to_string(upd->node)},
               {"component", str(supervisor::to_string(upd->component))},
               {"before", str(supervisor::to_string(upd->before))},
               {"after", str(supervisor::to_string(upd->after))},
               {"reporter", to_string(upd->from.reporter)},
               {"via", str(supervisor::to_string(upd->from.via))},
               {"created", std::to_string(upd->time)}});
}

RunResult World::finish() {
  RunResult res;
  res.report = supervisor::snapshot(health_, now_);
  for (const auto& inf : res.report.inferences) {
    trace_.emit(now_, "supervisor", "infer",
                {{"node", to_string(inf.node)},
                 {"verdict", str(supervisor::to_string(inf.kind))},
                 {"last_heartbeat", std::to_string(inf.last_heartbeat)},
                 {"evidence", std::to_string(inf.evidence.size())}});
  }
  res.trace = trace_;
  res.stats = stats_;
  return res;
}

RunResult run(const Scenario& sc) {
  World w(sc);
  w.run();
  return w.finish();
}

}  // namespace lofamo::sim
