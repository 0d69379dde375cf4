// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo/node/coord.hpp"

#include <charconv>

namespace lofamo {

NodeCoord neighbor(NodeCoord c, Direction d, TorusDims dims) {
  const int step = is_positive(d) ? 1 : -1;
  auto wrap = [](int v, int n) { return ((v % n) + n) % n; };
  switch (axis(d)) {
    case Axis::X: c.x = wrap(c.x + step, dims.nx); break;
    case Axis::Y: c.y = wrap(c.y + step, dims.ny); break;
    case Axis::Z: c.z = wrap(c.z + step, dims.nz); break;
  }
  return c;
}

std::size_t linear_index(NodeCoord c, TorusDims dims) {
  return static_cast<std::size_t>(c.x) +
         static_cast<std::size_t>(dims.nx) *
             (static_cast<std::size_t>(c.y) + static_cast<std::size_t>(dims.ny) * c.z);
}

NodeCoord coord_at(std::size_t index, TorusDims dims) {
  NodeCoord c;
  c.x = static_cast<int>(index % dims.nx);
  index /= dims.nx;
  c.y = static_cast<int>(index % dims.ny);
  c.z = static_cast<int>(index / dims.ny);
  return c;
}

std::string to_string(NodeCoord c) {
  return std::to_string(c.x) + "," + std::to_string(c.y) + "," + std::to_string(c.z);
}

std::optional<NodeCoord> parse_coord(std::string_view text) {
  int v[3];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc{}) return std::nullopt;
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') return std::nullopt;
      ++p;
    }
  }
  if (p != end) return std::nullopt;
  return NodeCoord{v[0], v[1], v[2]};
}

}  // namespace lofamo
