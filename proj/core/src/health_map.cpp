// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/supervisor/health_map.hpp"

#include <sstream>

namespace lofamo::supervisor {

std::string_view to_string(Inference::Kind k) {
  return k == Inference::Kind::NodeDead ? "DEAD" : "SILENT";
}

HealthMap::HealthMap(TorusDims dims, Tick heartbeat_timeout)
    : dims_(dims), heartbeat_timeout_(heartbeat_timeout), last_heartbeat_(dims.node_count(), 0) {}

std::optional<MapUpdate> HealthMap::ingest(const Report& r) {
  const std::size_t subject = linear_index(r.subject, dims_);
  if (is_heartbeat(r)) {
    if (r.time > last_heartbeat_[subject]) last_heartbeat_[subject] = r.time;
    return std::nullopt;
  }
  evidence_.push_back(r);
  const auto eff = effect(r);
  if (!eff) return std::nullopt;
  const auto [component, status] = *eff;
  auto [it, inserted] = entries_.try_emplace({subject, component});
  Entry& e = it->second;
  if (!inserted && r.time < e.time) return std::nullopt;  // stale
  const Status before = inserted ? Status::Normal : e.status;
  e.status = status;
  e.time = r.time;
  e.from = Provenance{r.reporter, r.via};
  if (before == status) return std::nullopt;
  return MapUpdate{r.subject, component, before, status, e.from, r.time};
}

const Entry* HealthMap::find(NodeCoord n, Component c) const {
  auto it = entries_.find({linear_index(n, dims_), c});
  return it == entries_.end() ? nullptr : &it->second;
}

Tick HealthMap::last_heartbeat(NodeCoord n) const { return last_heartbeat_[linear_index(n, dims_)]; }

std::vector<std::string> HealthMap::corroboration(NodeCoord n) const {
  std::vector<std::string> out;
  for (Direction d : kAllDirections) {
    // The neighbour across d reaches n through its port opposite(d).
    const NodeCoord m = neighbor(n, d, dims_);
    const Component c = link_component(opposite(d));
    if (const Entry* e = find(m, c); e && e->status == Status::Broken) {
      out.push_back(to_string(m) + ":" + std::string(to_string(c)) + "=BROKEN@" +
                    std::string(to_string(e->from.via)));
    }
  }
  if (const Entry* e = find(n, Component::Host);
      e && e->status == Status::Down && e->from.reporter != n) {
    out.push_back(to_string(e->from.reporter) + ":host(" + to_string(n) + ")=DOWN@" +
                  std::string(to_string(e->from.via)));
  }
  return out;
}

std::vector<Inference> HealthMap::infer(Tick now) const {
  std::vector<Inference> out;
  for (std::size_t i = 0; i < dims_.node_count(); ++i) {
    if (now - last_heartbeat_[i] <= heartbeat_timeout_) continue;
    Inference inf;
    inf.node = coord_at(i, dims_);
    inf.last_heartbeat = last_heartbeat_[i];
    inf.evidence = corroboration(inf.node);
    inf.kind = inf.evidence.empty() ? Inference::Kind::SilentNode : Inference::Kind::NodeDead;
    out.push_back(std::move(inf));
  }
  return out;
}

bool SystemHealthReport::all_healthy() const {
  if (!inferences.empty()) return false;
  for (const auto& r : records) {
    if (r.status != to_string(Status::Normal)) return false;
  }
  return true;
}

std::string SystemHealthReport::to_text() const {
  std::ostringstream out;
  std::size_t faulty = 0;
  for (const auto& r : records) {
    if (r.status != to_string(Status::Normal)) ++faulty;
  }
  out << "# lofamo health report\n";
  out << "# time " << time << '\n';
  out << "# status " << (all_healthy() ? "all-healthy" : "degraded") << " faulty=" << faulty
      << " inferences=" << inferences.size() << '\n';
  for (const auto& r : records) {
    out << to_string(r.node) << ' ' << r.component << ' ' << r.status << ' ' << r.provenance
        << ' ' << r.time << '\n';
  }
  return out.str();
}

SystemHealthReport snapshot(const HealthMap& hm, Tick now) {
  SystemHealthReport rep;
  rep.time = now;
  for (const auto& [key, e] : hm.entries()) {
    rep.records.push_back({coord_at(key.first, hm.dims()), std::string(to_string(key.second)),
                           std::string(to_string(e.status)),
                           to_string(e.from.reporter) + "@" + std::string(to_string(e.from.via)),
                           e.time});
  }
  rep.inferences = hm.infer(now);
  for (const auto& inf : rep.inferences) {
    std::string chain = "inferred:heartbeat-timeout(last=" + std::to_string(inf.last_heartbeat) + ")";
    for (const auto& ev : inf.evidence) chain += "|" + ev;
    rep.records.push_back({inf.node, "node", std::string(to_string(inf.kind)), chain, now});
  }
  return rep;
}

}  // namespace lofamo::supervisor
