// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "lofamo_cli.hpp"

int main(int argc, char** argv) {
  return lofamo::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
