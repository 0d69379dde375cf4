// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace lofamo {

// Simulated time in integral ticks.
using Tick = std::int64_t;

}  // namespace lofamo
