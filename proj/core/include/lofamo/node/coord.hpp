// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lofamo/registers/types.hpp"

namespace lofamo {

struct NodeCoord {
  int x = 0;
  int y = 0;
  int z = 0;

  auto operator<=>(const NodeCoord&) const = default;
};

struct TorusDims {
  int nx = 1;
  int ny = 1;
  int nz = 1;

  std::size_t node_count() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nz);
  }
  bool contains(NodeCoord c) const {
    return c.x >= 0 && c.x < nx && c.y >= 0 && c.y < ny && c.z >= 0 && c.z < nz;
  }
  bool operator==(const TorusDims&) const = default;
};

// Neighbour across direction d, wrapping on every axis.
NodeCoord neighbor(NodeCoord c, Direction d, TorusDims dims);

// x varies fastest.
std::size_t linear_index(NodeCoord c, TorusDims dims);
NodeCoord coord_at(std::size_t index, TorusDims dims);

// "x,y,z"
std::string to_string(NodeCoord c);
std::optional<NodeCoord> parse_coord(std::string_view text);

}  // namespace lofamo
