// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lofamo/node/coord.hpp"
#include "lofamo/time.hpp"

namespace lofamo::sim {

struct TraceEvent {
  Tick time = 0;
  std::string entity;
  std::string kind;
  std::vector<std::pair<std::string, std::string>> payload;

  std::string_view get(std::string_view key) const;  // empty if absent
  bool operator==(const TraceEvent&) const = default;
};

// Trace file layout:
//   #lofamo-trace<TAB>dims=X,Y,Z<TAB>seed=N
//   time<TAB>entity<TAB>kind<TAB>key=value key=value ...
//   #end<TAB>events=N
// Values never contain whitespace. Events appear in non-decreasing time.
struct Trace {
  TorusDims dims;
  std::uint64_t seed = 0;
  std::vector<TraceEvent> events;

  void emit(Tick time, std::string entity, std::string kind,
            std::vector<std::pair<std::string, std::string>> payload = {});

  // Events that are not plain heartbeats.
  std::size_t fault_event_count() const;
};

std::string format_event(const TraceEvent& e);
void write_trace(std::ostream& out, const Trace& trace);
std::string to_text(const Trace& trace);
// Throws Error on a malformed or truncated trace.
Trace parse_trace(std::istream& in);

}  // namespace lofamo::sim
