// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/sim/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace lofamo::sim {

using network::FaultEvent;
using network::FaultKind;

const registers::Thresholds& Params::thresholds(Quantity q) const {
  switch (q) {
    case Quantity::Temperature: return temperature;
    case Quantity::Power: return power;
    case Quantity::Voltage: return voltage;
  }
  return temperature;
}

namespace {

std::string join_messages(const std::vector<Violation>& v) {
  std::string s = "invalid scenario:";
  for (const auto& x : v) s += "\n  " + x.field + ": " + x.message;
  return s;
}

void check_period_order(std::vector<Violation>& out, const char* field, Tick write, Tick read,
                        const char* reg) {
  if (write >= read) {
    out.push_back({field, "watchdog period order: " + std::string(reg) + " write period " +
                              std::to_string(write) + " must be shorter than read period " +
                              std::to_string(read)});
  }
}

void check_thresholds(std::vector<Violation>& out, const std::string& field,
                      const registers::Thresholds& t, int lo, int hi) {
  if (!t.sorted()) out.push_back({field, "unsorted thresholds: boundaries must be non-decreasing"});
  for (int b : t.bound) {
    if (b < lo || b > hi) {
      out.push_back({field, "boundary " + std::to_string(b) + " outside [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]"});
      break;
    }
  }
}

std::pair<int, int> sensor_range(Quantity q) {
  if (q == Quantity::Temperature) return {registers::kMinCelsius, registers::kMaxCelsius};
  return {0, 255};
}

}  // namespace

InvalidScenario::InvalidScenario(std::vector<Violation> violations)
    : Error(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const Scenario& sc) {
  std::vector<Violation> out;
  const auto& d = sc.dims;
  if (d.nx < 1 || d.ny < 1 || d.nz < 1) {
    out.push_back({"dims", "every dimension must be >= 1"});
  } else if (d.node_count() > kMaxNodes) {
    out.push_back({"dims", "torus larger than " + std::to_string(kMaxNodes) + " nodes"});
  }
  if (sc.duration < 1) out.push_back({"duration", "must be >= 1"});

  const Params& p = sc.params;
  const std::pair<const char*, Tick> periods[] = {
      {"params.dnp_write_period", p.dnp_write_period},
      {"params.dnp_read_period", p.dnp_read_period},
      {"params.host_write_period", p.host_write_period},
      {"params.host_read_period", p.host_read_period},
      {"params.heartbeat_period", p.heartbeat_period},
      {"params.heartbeat_timeout", p.heartbeat_timeout}};
  for (const auto& [field, v] : periods) {
    if (v < 1) out.push_back({field, "must be >= 1"});
  }
  check_period_order(out, "params.dnp_write_period", p.dnp_write_period, p.host_read_period,
                     "DNP watchdog");
  check_period_order(out, "params.host_write_period", p.host_write_period, p.dnp_read_period,
                     "host watchdog");
  if (p.miss_tolerance < 1) out.push_back({"params.miss_tolerance", "must be >= 1"});
  if (!(p.link_error_threshold >= 0.0 && p.link_error_threshold <= 1.0)) {
    out.push_back({"params.link_error_threshold", "must be within [0, 1]"});
  }
  if (p.link_window < 1 || p.link_window > kMaxLinkWindow) {
    out.push_back({"params.link_window", "must be within [1, " + std::to_string(kMaxLinkWindow) + "]"});
  }
  if (p.link_probe_packets < 0 || p.link_probe_packets > kMaxProbePackets) {
    out.push_back({"params.link_probe_packets",
                   "must be within [0, " + std::to_string(kMaxProbePackets) + "]"});
  }
  if (p.maxhops < 0 || p.maxhops > 255) out.push_back({"params.maxhops", "must be within [0, 255]"});
  if (p.mesh_latency < 0) out.push_back({"params.mesh_latency", "must be >= 0"});
  if (p.service_latency < 0) out.push_back({"params.service_latency", "must be >= 0"});
  check_thresholds(out, "params.temperature_thresholds", p.temperature, registers::kMinCelsius,
                   registers::kMaxCelsius);
  check_thresholds(out, "params.power_thresholds", p.power, 0, 255);
  check_thresholds(out, "params.voltage_thresholds", p.voltage, 0, 255);

  for (std::size_t i = 0; i < sc.faults.size(); ++i) {
    const FaultEvent& e = sc.faults[i];
    const std::string f = "faults[" + std::to_string(i) + "]";
    if (e.time < 0 || e.time > sc.duration) {
      out.push_back({f + ".time", "event time " + std::to_string(e.time) + " outside [0, " +
                                      std::to_string(sc.duration) + "]"});
    }
    if (!d.contains(e.node)) {
      out.push_back({f + ".node", "coordinate " + to_string(e.node) + " outside the torus"});
    }
    if (e.kind == FaultKind::LinkSick && !(e.error_rate >= 0.0 && e.error_rate <= 1.0)) {
      out.push_back({f + ".error_rate", "must be within [0, 1]"});
    }
    if (e.kind == FaultKind::Sensor) {
      auto [lo, hi] = sensor_range(e.quantity);
      if (e.value < lo || e.value > hi) {
        out.push_back({f + ".value", "sensor value outside [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "]"});
      }
      if (e.ramp < 0) out.push_back({f + ".ramp", "must be >= 0"});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// YAML

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error("scenario: " + what); }

void reject_unknown(const YAML::Node& map, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!known.count(key)) fail("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T scalar(const YAML::Node& n, const std::string& what) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    fail("bad value for " + what);
  }
}

NodeCoord coord_of(const YAML::Node& n, const std::string& what) {
  if (!n.IsSequence() || n.size() != 3) fail(what + " must be [x, y, z]");
  return {scalar<int>(n[0], what), scalar<int>(n[1], what), scalar<int>(n[2], what)};
}

registers::Thresholds thresholds_of(const YAML::Node& n, const std::string& what) {
  if (!n.IsSequence() || n.size() != 4) fail(what + " must list four boundaries");
  registers::Thresholds t;
  for (std::size_t i = 0; i < 4; ++i) t.bound[i] = scalar<int>(n[i], what);
  return t;
}

FaultEvent fault_of(const YAML::Node& n, std::size_t i) {
  const std::string where = "faults[" + std::to_string(i) + "]";
  if (!n.IsMap()) fail(where + " must be a mapping");
  reject_unknown(n, {"time", "kind", "node", "dir", "error_rate", "quantity", "value", "ramp",
                     "part", "status"},
                 where);
  FaultEvent e;
  if (!n["time"] || !n["kind"] || !n["node"]) fail(where + " needs time, kind and node");
  e.time = scalar<Tick>(n["time"], where + ".time");
  const auto kind = scalar<std::string>(n["kind"], where + ".kind");
  auto k = network::parse_fault_kind(kind);
  if (!k) fail("unknown fault kind '" + kind + "'");
  e.kind = *k;
  e.node = coord_of(n["node"], where + ".node");
  if (n["dir"]) {
    auto d = parse_direction(scalar<std::string>(n["dir"], where + ".dir"));
    if (!d) fail(where + ".dir must be one of Z- Z+ Y- Y+ X- X+");
    e.dir = *d;
  } else if (network::uses_direction(e.kind)) {
    fail(where + " needs dir");
  }
  if (n["error_rate"]) e.error_rate = scalar<double>(n["error_rate"], where + ".error_rate");
  if (n["quantity"]) {
    auto q = parse_quantity(scalar<std::string>(n["quantity"], where + ".quantity"));
    if (!q) fail(where + ".quantity must be temperature, power or voltage");
    e.quantity = *q;
  }
  if (n["value"]) e.value = scalar<int>(n["value"], where + ".value");
  if (n["ramp"]) e.ramp = scalar<Tick>(n["ramp"], where + ".ramp");
  if (n["part"]) {
    auto p = parse_host_part(scalar<std::string>(n["part"], where + ".part"));
    if (!p) fail(where + ".part must be service_net, memory, peripheral0 or peripheral1");
    e.part = *p;
  }
  if (n["status"]) {
    auto s = parse_tristate(scalar<std::string>(n["status"], where + ".status"));
    if (!s) fail(where + ".status must be NORMAL, SICK or BROKEN");
    e.status = *s;
  }
  if (e.kind == FaultKind::Sensor && !n["value"]) fail(where + " needs value");
  return e;
}

void params_of(const YAML::Node& n, Params& p) {
  if (!n.IsMap()) fail("params must be a mapping");
  reject_unknown(n,
                 {"dnp_write_period", "dnp_read_period", "host_write_period", "host_read_period",
                  "miss_tolerance", "link_error_threshold", "link_window", "link_probe_packets",
                  "maxhops", "heartbeat_period", "heartbeat_timeout", "mesh_latency",
                  "service_latency", "temperature_thresholds", "power_thresholds",
                  "voltage_thresholds", "initial_temperature", "initial_power",
                  "initial_voltage", "strict_masks"},
                 "params");
  auto tick = [&](const char* key, Tick& dst) {
    if (n[key]) dst = scalar<Tick>(n[key], key);
  };
  auto integer = [&](const char* key, int& dst) {
    if (n[key]) dst = scalar<int>(n[key], key);
  };
  tick("dnp_write_period", p.dnp_write_period);
  tick("dnp_read_period", p.dnp_read_period);
  tick("host_write_period", p.host_write_period);
  tick("host_read_period", p.host_read_period);
  integer("miss_tolerance", p.miss_tolerance);
  if (n["link_error_threshold"]) {
    p.link_error_threshold = scalar<double>(n["link_error_threshold"], "link_error_threshold");
  }
  if (n["link_window"]) {
    const auto w = scalar<long long>(n["link_window"], "link_window");
    p.link_window = w < 0 ? 0 : static_cast<std::size_t>(w);
  }
  integer("link_probe_packets", p.link_probe_packets);
  integer("maxhops", p.maxhops);
  tick("heartbeat_period", p.heartbeat_period);
  tick("heartbeat_timeout", p.heartbeat_timeout);
  tick("mesh_latency", p.mesh_latency);
  tick("service_latency", p.service_latency);
  if (n["temperature_thresholds"]) {
    p.temperature = thresholds_of(n["temperature_thresholds"], "temperature_thresholds");
  }
  if (n["power_thresholds"]) p.power = thresholds_of(n["power_thresholds"], "power_thresholds");
  if (n["voltage_thresholds"]) {
    p.voltage = thresholds_of(n["voltage_thresholds"], "voltage_thresholds");
  }
  integer("initial_temperature", p.initial_sensors.temperature_c);
  integer("initial_power", p.initial_sensors.power);
  integer("initial_voltage", p.initial_sensors.voltage);
  if (n["strict_masks"]) p.strict_masks = scalar<bool>(n["strict_masks"], "strict_masks");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    fail(std::string("YAML syntax: ") + e.what());
  }
  if (!root.IsMap()) fail("top level must be a mapping");
  reject_unknown(root, {"name", "dims", "duration", "seed", "params", "faults"}, "scenario");
  Scenario sc;
  if (root["name"]) sc.name = scalar<std::string>(root["name"], "name");
  if (root["dims"]) {
    const NodeCoord d = coord_of(root["dims"], "dims");
    sc.dims = {d.x, d.y, d.z};
  }
  if (root["duration"]) sc.duration = scalar<Tick>(root["duration"], "duration");
  if (root["seed"]) sc.seed = scalar<std::uint64_t>(root["seed"], "seed");
  if (root["params"]) params_of(root["params"], sc.params);
  // With a custom heartbeat period and no explicit timeout, keep timeout = 3H.
  if (root["params"] && root["params"]["heartbeat_period"] && !root["params"]["heartbeat_timeout"]) {
    sc.params.heartbeat_timeout = 3 * sc.params.heartbeat_period;
  }
  if (root["faults"]) {
    const auto& faults = root["faults"];
    if (!faults.IsSequence()) fail("faults must be a list");
    for (std::size_t i = 0; i < faults.size(); ++i) sc.faults.push_back(fault_of(faults[i], i));
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string to_yaml(const Scenario& sc) {
  YAML::Emitter out;
  auto flow_seq = [&](std::initializer_list<long long> xs) {
    out << YAML::Flow << YAML::BeginSeq;
    for (auto x : xs) out << x;
    out << YAML::EndSeq;
  };
  auto thresholds = [&](const registers::Thresholds& t) {
    flow_seq({t.bound[0], t.bound[1], t.bound[2], t.bound[3]});
  };
  const Params& p = sc.params;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << sc.name;
  out << YAML::Key << "dims" << YAML::Value;
  flow_seq({sc.dims.nx, sc.dims.ny, sc.dims.nz});
  out << YAML::Key << "duration" << YAML::Value << sc.duration;
  out << YAML::Key << "seed" << YAML::Value << sc.seed;
  out << YAML::Key << "params" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "dnp_write_period" << YAML::Value << p.dnp_write_period;
  out << YAML::Key << "dnp_read_period" << YAML::Value << p.dnp_read_period;
  out << YAML::Key << "host_write_period" << YAML::Value << p.host_write_period;
  out << YAML::Key << "host_read_period" << YAML::Value << p.host_read_period;
  out << YAML::Key << "miss_tolerance" << YAML::Value << p.miss_tolerance;
  out << YAML::Key << "link_error_threshold" << YAML::Value << p.link_error_threshold;
  out << YAML::Key << "link_window" << YAML::Value << p.link_window;
  out << YAML::Key << "link_probe_packets" << YAML::Value << p.link_probe_packets;
  out << YAML::Key << "maxhops" << YAML::Value << p.maxhops;
  out << YAML::Key << "heartbeat_period" << YAML::Value << p.heartbeat_period;
  out << YAML::Key << "heartbeat_timeout" << YAML::Value << p.heartbeat_timeout;
  out << YAML::Key << "mesh_latency" << YAML::Value << p.mesh_latency;
  out << YAML::Key << "service_latency" << YAML::Value << p.service_latency;
  out << YAML::Key << "temperature_thresholds" << YAML::Value;
  thresholds(p.temperature);
  out << YAML::Key << "power_thresholds" << YAML::Value;
  thresholds(p.power);
  out << YAML::Key << "voltage_thresholds" << YAML::Value;
  thresholds(p.voltage);
  out << YAML::Key << "initial_temperature" << YAML::Value << p.initial_sensors.temperature_c;
  out << YAML::Key << "initial_power" << YAML::Value << p.initial_sensors.power;
  out << YAML::Key << "initial_voltage" << YAML::Value << p.initial_sensors.voltage;
  out << YAML::Key << "strict_masks" << YAML::Value << p.strict_masks;
  out << YAML::EndMap;
  out << YAML::Key << "faults" << YAML::Value << YAML::BeginSeq;
  for (const FaultEvent& e : sc.faults) {
    out << YAML::BeginMap;
    out << YAML::Key << "time" << YAML::Value << e.time;
    out << YAML::Key << "kind" << YAML::Value << std::string(network::to_string(e.kind));
    out << YAML::Key << "node" << YAML::Value;
    flow_seq({e.node.x, e.node.y, e.node.z});
    if (network::uses_direction(e.kind)) {
      out << YAML::Key << "dir" << YAML::Value << std::string(to_string(e.dir));
    }
    if (e.kind == FaultKind::LinkSick) out << YAML::Key << "error_rate" << YAML::Value << e.error_rate;
    if (e.kind == FaultKind::Sensor) {
      out << YAML::Key << "quantity" << YAML::Value << std::string(to_string(e.quantity));
      out << YAML::Key << "value" << YAML::Value << e.value;
      out << YAML::Key << "ramp" << YAML::Value << e.ramp;
    }
    if (e.kind == FaultKind::HostComponent) {
      out << YAML::Key << "part" << YAML::Value << std::string(to_string(e.part));
      out << YAML::Key << "status" << YAML::Value << std::string(to_string(e.status));
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scenario file '" + path + "'");
  out << to_yaml(sc);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace lofamo::sim
