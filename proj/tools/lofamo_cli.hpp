// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lofamo::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kCheckFailed = 3;

// Decoders shared by `decode` and `decode --dump`. Throw IllegalEncoding.
std::string describe_dnp_wd(std::uint32_t word);
std::string describe_host_wd(std::uint32_t word);
std::string describe_remote_fault(std::uint32_t word);
std::string describe_temperature(std::uint32_t word);

// Entry point; argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lofamo::cli
