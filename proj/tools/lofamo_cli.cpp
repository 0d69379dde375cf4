// Copyright 2026 The lofamo Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lofamo_cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstring>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "lofamo/error.hpp"
#include "lofamo/registers/register_file.hpp"
#include "lofamo/registers/status_registers.hpp"
#include "lofamo/registers/temperature.hpp"
#include "lofamo/sim/matrix.hpp"
#include "lofamo/sim/scenario.hpp"
#include "lofamo/sim/summary.hpp"
#include "lofamo/sim/trace.hpp"
#include "lofamo/sim/world.hpp"

namespace lofamo::cli {

namespace fs = std::filesystem;

namespace {

std::string s(std::string_view v) { return std::string(v); }

std::optional<Word> parse_hex(std::string text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) text = text.substr(2);
  if (text.empty() || text.size() > 8) return std::nullopt;
  Word w = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), w, 16);
  if (ec != std::errc{} || p != text.data() + text.size()) return std::nullopt;
  return w;
}

std::string hex8(Word w) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", w);
  return buf;
}

std::string parts_list(const registers::RemoteHostFault& f) {
  std::string out;
  auto add = [&](bool b, const char* name) {
    if (!b) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(f.service_net, "service_net");
  add(f.memory, "memory");
  add(f.peripheral0, "peripheral0");
  add(f.peripheral1, "peripheral1");
  return out.empty() ? "-" : out;
}

std::string describe_thresholds(std::string_view name, Word w) {
  const auto t = name == "temp-thresholds" ? registers::unpack_temperature_thresholds(w)
                                           : registers::unpack_raw_thresholds(w);
  std::ostringstream out;
  out << t.bound[0] << ' ' << t.bound[1] << ' ' << t.bound[2] << ' ' << t.bound[3];
  return out.str();
}

// Output file with an optional buffer size from LOFAMO_TRACE_BUFFER.
class OutFile {
 public:
  explicit OutFile(const fs::path& path) {
    if (const char* env = std::getenv("LOFAMO_TRACE_BUFFER")) {
      std::size_t n = 0;
      auto [p, ec] = std::from_chars(env, env + std::strlen(env), n);
      if (ec == std::errc{} && n > 0) {
        buffer_ = std::make_unique<char[]>(n);
        out_.rdbuf()->pubsetbuf(buffer_.get(), static_cast<std::streamsize>(n));
      }
    }
    out_.open(path);
    if (!out_) throw sim::IoError("cannot write '" + path.string() + "'");
  }
  std::ostream& stream() { return out_; }
  void close(const fs::path& path) {
    out_.close();
    if (!out_) throw sim::IoError("write failed for '" + path.string() + "'");
  }

 private:
  std::unique_ptr<char[]> buffer_;
  std::ofstream out_;
};

void write_outputs(const fs::path& dir, const std::string& name, const sim::RunResult& res) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw sim::IoError("cannot create '" + dir.string() + "': " + ec.message());
  const fs::path trace_path = dir / (name + ".trace.tsv");
  OutFile trace(trace_path);
  sim::write_trace(trace.stream(), res.trace);
  trace.close(trace_path);
  const fs::path health_path = dir / (name + ".health.txt");
  OutFile health(health_path);
  health.stream() << res.report.to_text();
  health.close(health_path);
}

TorusDims parse_dims(const std::string& text) {
  const auto c = parse_coord(text);
  if (!c) throw Error("dims must look like X,Y,Z");
  return {c->x, c->y, c->z};
}

void print_violations(std::ostream& err, const sim::InvalidScenario& e) {
  err << "invalid scenario\n";
  for (const auto& v : e.violations()) err << "  " << v.field << ": " << v.message << '\n';
}

// --- subcommands ------------------------------------------------------------

int cmd_run(const std::string& file, std::optional<std::uint64_t> seed, const std::string& out_dir,
            std::optional<bool> strict, std::ostream& out) {
  sim::Scenario sc = sim::load_scenario(file);
  if (seed) sc.seed = *seed;
  if (strict) sc.params.strict_masks = *strict;
  const auto res = sim::run(sc);
  write_outputs(out_dir, sc.name, res);
  out << sc.name << ": " << res.stats.events << " events, " << res.trace.events.size()
      << " trace lines, " << (res.report.all_healthy() ? "all-healthy" : "degraded") << '\n';
  out << "wrote " << (fs::path(out_dir) / (sc.name + ".trace.tsv")).string() << " and "
      << (fs::path(out_dir) / (sc.name + ".health.txt")).string() << '\n';
  return kOk;
}

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
  const sim::Scenario sc = sim::load_scenario(file);
  const auto v = sim::validate(sc);
  if (!v.empty()) {
    print_violations(err, sim::InvalidScenario(v));
    return kInvalidInput;
  }
  out << sc.name << ": ok (" << sc.dims.nx << 'x' << sc.dims.ny << 'x' << sc.dims.nz << ", "
      << sc.faults.size() << " faults, duration " << sc.duration << ")\n";
  return kOk;
}

int cmd_decode(const std::string& reg, const std::string& hex, const std::string& dump,
               std::ostream& out, std::ostream& err) {
  if (!dump.empty()) {
    std::ifstream in(dump);
    if (!in) throw sim::IoError("cannot open dump '" + dump + "'");
    for (const auto& [a, w] : registers::parse_dump(in)) {
      const auto* info = registers::find_register(a);
      out << hex8(a) << ' ' << (info ? info->name : "unmapped") << ' ' << hex8(w);
      if (info) {
        const auto n = info->name;
        if (n == "dnp-wd") out << "  " << describe_dnp_wd(w);
        else if (n == "host-wd") out << "  " << describe_host_wd(w);
        else if (n == "remote-fault") out << "  " << describe_remote_fault(w);
        else if (n == "temperature") out << "  " << describe_temperature(w);
        else if (n.ends_with("-thresholds")) out << "  " << describe_thresholds(n, w);
      }
      out << '\n';
    }
    return kOk;
  }
  if (reg.empty() || hex.empty()) {
    err << "decode: give a register and a hex word, or --dump FILE\n";
    return kInvalidInput;
  }
  const auto w = parse_hex(hex);
  if (!w) {
    err << "decode: '" << hex << "' is not a 32-bit hex word\n";
    return kInvalidInput;
  }
  if (reg == "dnp-wd") out << describe_dnp_wd(*w) << '\n';
  else if (reg == "host-wd") out << describe_host_wd(*w) << '\n';
  else if (reg == "remote-fault") out << describe_remote_fault(*w) << '\n';
  else if (reg == "temp") out << describe_temperature(*w) << '\n';
  else {
    err << "decode: unknown register '" << reg << "' (dnp-wd, host-wd, remote-fault, temp)\n";
    return kInvalidInput;
  }
  return kOk;
}

int cmd_dump_registers(const std::string& scenario, const std::string& node,
                       std::optional<Tick> at, std::ostream& out, std::ostream& err) {
  sim::Scenario sc;
  sc.name = "default";
  if (!scenario.empty()) sc = sim::load_scenario(scenario);
  NodeCoord c{};
  if (!node.empty()) {
    const auto parsed = parse_coord(node);
    if (!parsed || !sc.dims.contains(*parsed)) {
      err << "dump-registers: no node '" << node << "' in the torus\n";
      return kInvalidInput;
    }
    c = *parsed;
  }
  sim::World w(sc);
  w.run_until(at.value_or(sc.duration));
  registers::write_dump(out, w.tile(c).dnp.regfile());
  return kOk;
}

int cmd_matrix(const std::string& out_dir, const std::string& dims_text, std::uint64_t seed,
               std::ostream& out) {
  const TorusDims dims = dims_text.empty() ? TorusDims{3, 3, 3} : parse_dims(dims_text);
  int failures = 0;
  for (const auto& row : sim::fault_table(dims)) {
    const sim::Scenario sc = sim::matrix_scenario(row, dims, seed);
    const auto res = sim::run(sc);
    write_outputs(out_dir, sc.name, res);
    const std::string problem = sim::check_detector(row, res.trace);
    const auto summary = sim::summarize(res.trace);
    out << (problem.empty() ? "PASS " : "FAIL ") << row.name << " detector="
        << sim::to_string(row.detector) << " path=" << supervisor::to_string(row.path);
    if (!summary.awareness.empty() && summary.awareness.front().latency) {
      out << " latency=" << *summary.awareness.front().latency;
    }
    if (!problem.empty()) {
      out << " (" << problem << ")";
      ++failures;
    }
    out << '\n';
  }
  return failures == 0 ? kOk : kCheckFailed;
}

int cmd_summarize(const std::string& file, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw sim::IoError("cannot open trace '" + file + "'");
  const sim::Trace t = sim::parse_trace(in);
  out << sim::summarize(t).to_text();
  return kOk;
}

}  // namespace

std::string describe_dnp_wd(Word word) {
  const auto r = registers::decode_dnp_wd(word);
  std::ostringstream out;
  out << (r.valid ? "valid" : "invalid");
  out << "; core=" << to_string(r.core) << "; temperature=" << to_string(r.temperature)
      << "; power=" << to_string(r.power) << "; voltage=" << to_string(r.voltage) << "; links";
  for (Direction d : kAllDirections) out << ' ' << to_string(d) << '=' << to_string(r.link[index(d)]);
  out << "; neighbour host fail";
  bool any = false;
  for (Direction d : kAllDirections) {
    if (r.neighbor_host_fail[index(d)]) {
      out << ' ' << to_string(d);
      any = true;
    }
  }
  if (!any) out << " none";
  return out.str();
}

std::string describe_host_wd(Word word) {
  const auto r = registers::decode_host_wd(word);
  std::ostringstream out;
  out << (r.valid ? "valid" : "invalid") << "; service_net=" << to_string(r.service_net)
      << "; memory=" << to_string(r.memory) << "; peripheral0=" << to_string(r.peripheral0)
      << "; peripheral1=" << to_string(r.peripheral1);
  return out.str();
}

std::string describe_remote_fault(Word word) {
  const auto r = registers::decode_remote_fault(word);
  std::string out;
  for (Direction d : kAllDirections) {
    if (!out.empty()) out += "; ";
    out += s(to_string(d)) + '=' + parts_list(r.dir[index(d)]);
  }
  return out;
}

std::string describe_temperature(Word word) {
  if (word > 0xff) throw IllegalEncoding("temperature", "temperature register holds one byte");
  return std::to_string(registers::temp_decode(static_cast<std::uint8_t>(word))) + " C";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lofamo: fault-awareness simulator for 3D-torus DNP clusters"};
  app.require_subcommand(1);

  std::string scenario_file, out_dir = ".", dims_text, reg, hex, dump, node;
  std::uint64_t seed_value = 0;
  std::uint64_t matrix_seed = 42;
  bool strict = false, no_strict = false;
  Tick at = 0;

  auto* run = app.add_subcommand("run", "Run a scenario, write trace and health report");
  run->add_option("scenario", scenario_file, "Scenario YAML file")->required();
  auto* seed_opt = run->add_option("--seed", seed_value, "Override the scenario seed");
  run->add_option("--out", out_dir, "Output directory");
  auto* strict_flag = run->add_flag("--strict-masks", strict, "Reject writes outside register masks");
  auto* lax_flag = run->add_flag("--no-strict-masks", no_strict, "Silently mask register writes");
  strict_flag->excludes(lax_flag);

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("scenario", scenario_file, "Scenario YAML file")->required();

  auto* decode = app.add_subcommand("decode", "Decode a register word");
  decode->add_option("register", reg, "dnp-wd, host-wd, remote-fault or temp");
  decode->add_option("word", hex, "Hex word");
  decode->add_option("--dump", dump, "Decode every register of a hex dump file");

  auto* dump_regs = app.add_subcommand("dump-registers", "Hex dump of one node's registers");
  dump_regs->add_option("--scenario", scenario_file, "Scenario YAML file (default: fault-free)");
  dump_regs->add_option("--node", node, "Node coordinate x,y,z (default 0,0,0)");
  auto* at_opt = dump_regs->add_option("--time", at, "Simulated time of the dump");

  auto* matrix = app.add_subcommand("matrix", "Run the fault-detection matrix");
  matrix->add_option("--out", out_dir, "Output directory")->required();
  matrix->add_option("--dims", dims_text, "Torus dimensions X,Y,Z (default 3,3,3)");
  matrix->add_option("--seed", matrix_seed, "Seed");

  auto* summarize = app.add_subcommand("summarize", "Summarize a trace file");
  summarize->add_option("trace", scenario_file, "Trace file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*run) {
      std::optional<bool> strict_override;
      if (strict) strict_override = true;
      if (no_strict) strict_override = false;
      std::optional<std::uint64_t> seed;
      if (*seed_opt) seed = seed_value;
      return cmd_run(scenario_file, seed, out_dir, strict_override, out);
    }
    if (*validate) return cmd_validate(scenario_file, out, err);
    if (*decode) return cmd_decode(reg, hex, dump, out, err);
    if (*dump_regs) {
      return cmd_dump_registers(scenario_file, node,
                                *at_opt ? std::optional<Tick>(at) : std::nullopt, out, err);
    }
    if (*matrix) return cmd_matrix(out_dir, dims_text, matrix_seed, out);
    if (*summarize) return cmd_summarize(scenario_file, out);
  } catch (const sim::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const sim::InvalidScenario& e) {
    print_violations(err, e);
    return kInvalidInput;
  } catch (const IllegalEncoding& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace lofamo::cli
