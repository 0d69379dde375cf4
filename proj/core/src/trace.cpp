// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/sim/trace.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "lofamo/error.hpp"

namespace lofamo::sim {

namespace {

constexpr std::string_view kMagic = "#lofamo-trace";
constexpr std::string_view kEnd = "#end";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
bool parse_int(std::string_view s, T& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error("trace line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string_view TraceEvent::get(std::string_view key) const {
  for (const auto& [k, v] : payload) {
    if (k == key) return v;
  }
  return {};
}

void Trace::emit(Tick time, std::string entity, std::string kind,
                 std::vector<std::pair<std::string, std::string>> payload) {
  events.push_back({time, std::move(entity), std::move(kind), std::move(payload)});
}

std::size_t Trace::fault_event_count() const {
  std::size_t n = 0;
  for (const auto& e : events) n += e.kind != "heartbeat";
  return n;
}

std::string format_event(const TraceEvent& e) {
  std::string s = std::to_string(e.time);
  s += '\t';
  s += e.entity;
  s += '\t';
  s += e.kind;
  s += '\t';
  bool first = true;
  for (const auto& [k, v] : e.payload) {
    if (!first) s += ' ';
    first = false;
    s += k;
    s += '=';
    s += v;
  }
  return s;
}

void write_trace(std::ostream& out, const Trace& trace) {
  out << kMagic << "\tdims=" << trace.dims.nx << ',' << trace.dims.ny << ',' << trace.dims.nz
      << "\tseed=" << trace.seed << '\n';
  for (const auto& e : trace.events) out << format_event(e) << '\n';
  out << kEnd << "\tevents=" << trace.events.size() << '\n';
}

std::string to_text(const Trace& trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

Trace parse_trace(std::istream& in) {
  Trace t;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw Error("trace is empty");
  ++lineno;
  {
    const auto fields = split(line, '\t');
    if (fields.size() != 3 || fields[0] != kMagic) malformed(lineno, "missing trace header");
    if (fields[1].substr(0, 5) != "dims=") malformed(lineno, "header lacks dims");
    const auto d = split(fields[1].substr(5), ',');
    if (d.size() != 3 || !parse_int(d[0], t.dims.nx) || !parse_int(d[1], t.dims.ny) ||
        !parse_int(d[2], t.dims.nz)) {
      malformed(lineno, "bad dims");
    }
    if (fields[2].substr(0, 5) != "seed=" || !parse_int(fields[2].substr(5), t.seed)) {
      malformed(lineno, "bad seed");
    }
  }
  bool ended = false;
  Tick last = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (ended) {
      if (line.empty()) continue;
      malformed(lineno, "content after end marker");
    }
    const auto fields = split(line, '\t');
    if (fields[0] == kEnd) {
      std::size_t n = 0;
      if (fields.size() != 2 || fields[1].substr(0, 7) != "events=" ||
          !parse_int(fields[1].substr(7), n)) {
        malformed(lineno, "bad end marker");
      }
      if (n != t.events.size()) {
        malformed(lineno, "end marker counts " + std::to_string(n) + " events, found " +
                              std::to_string(t.events.size()));
      }
      ended = true;
      continue;
    }
    if (fields.size() != 4) malformed(lineno, "expected 4 tab-separated fields");
    TraceEvent e;
    if (!parse_int(fields[0], e.time)) malformed(lineno, "bad time");
    if (e.time < last) malformed(lineno, "time goes backwards");
    last = e.time;
    if (fields[1].empty() || fields[2].empty()) malformed(lineno, "empty entity or kind");
    e.entity = fields[1];
    e.kind = fields[2];
    if (!fields[3].empty()) {
      for (auto kv : split(fields[3], ' ')) {
        const auto eq = kv.find('=');
        if (eq == std::string_view::npos || eq == 0) malformed(lineno, "bad key=value pair");
        e.payload.emplace_back(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
      }
    }
    t.events.push_back(std::move(e));
  }
  if (!ended) throw Error("trace truncated: no end marker after line " + std::to_string(lineno));
  return t;
}

}  // namespace lofamo::sim
