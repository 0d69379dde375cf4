// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lofamo_cli.hpp"

namespace lofamo::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lofamo");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("lofamo_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

TEST(Cli, DecodeExamples) {
  auto r = cli({"decode", "temp", "E4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "100 C\n");
  r = cli({"decode", "host-wd", "00000005"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("valid; service_net=BROKEN; ", 0), 0u) << r.out;
  r = cli({"decode", "dnp-wd", "00006000"});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_NE(r.err.find("temperature field illegal code 11"), std::string::npos);
  r = cli({"decode", "remote-fault", "0x00100000"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("X+=service_net"), std::string::npos) << r.out;
  EXPECT_EQ(cli({"decode", "temp", "zz"}).code, kInvalidInput);
  EXPECT_EQ(cli({"decode", "bogus", "1"}).code, kInvalidInput);
}

TEST(Cli, RunWritesTraceAndHealth) {
  const fs::path dir = scratch("run");
  write(dir / "s.yaml",
        "name: cut\ndims: [2, 2, 2]\nduration: 200\nfaults:\n"
        "  - {time: 50, kind: link-broken, node: [0, 0, 0], dir: Y+}\n");
  auto r = cli({"run", (dir / "s.yaml").string(), "--out", (dir / "out").string(), "--seed", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  ASSERT_TRUE(fs::exists(dir / "out" / "cut.trace.tsv"));
  ASSERT_TRUE(fs::exists(dir / "out" / "cut.health.txt"));
  std::ifstream h(dir / "out" / "cut.health.txt");
  std::string first;
  std::getline(h, first);
  EXPECT_EQ(first, "# lofamo health report");

  r = cli({"summarize", (dir / "out" / "cut.trace.tsv").string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("1 faults, ", 0), 0u) << r.out;
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch("codes");
  EXPECT_EQ(cli({"run", (dir / "missing.yaml").string()}).code, kIoError);
  write(dir / "bad.yaml", "params: {dnp_write_period: 20}\n");
  auto r = cli({"run", (dir / "bad.yaml").string(), "--out", dir.string()});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_NE(r.err.find("watchdog period order"), std::string::npos);
  EXPECT_EQ(cli({"validate", (dir / "bad.yaml").string()}).code, kInvalidInput);
  write(dir / "good.yaml", "name: ok\n");
  EXPECT_EQ(cli({"validate", (dir / "good.yaml").string()}).code, kOk);
  EXPECT_EQ(cli({"run", (dir / "good.yaml").string(), "--strict-masks", "--no-strict-masks"}).code,
            kInvalidInput);

  write(dir / "trunc.tsv", "#lofamo-trace\tdims=2,2,2\tseed=1\n0\thost@0,0,0\theartbeat\t\n");
  r = cli({"summarize", (dir / "trunc.tsv").string()});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_NE(r.err.find("truncated"), std::string::npos);
  EXPECT_EQ(cli({"frobnicate"}).code, kInvalidInput);
}

TEST(Cli, DumpRegistersAndDecodeDump) {
  const fs::path dir = scratch("dump");
  auto r = cli({"dump-registers", "--node", "1,0,1", "--time", "100"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("00000f40: 000000ad\n"), std::string::npos) << r.out;  // 45 C
  write(dir / "regs.txt", r.out);
  r = cli({"decode", "--dump", (dir / "regs.txt").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("temperature 000000ad  45 C"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("temp-thresholds d5c68076  -10 0 70 85"), std::string::npos) << r.out;
  EXPECT_EQ(cli({"dump-registers", "--node", "9,9,9"}).code, kInvalidInput);
}

TEST(Cli, MatrixMaterializesScenarios) {
  const fs::path dir = scratch("matrix");
  const auto r = cli({"matrix", "--out", dir.string()});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "matrix-host-breakdown.trace.tsv"));
}

}  // namespace
}  // namespace lofamo::cli
