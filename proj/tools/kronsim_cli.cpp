// Copyright 2026 The kronsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kronsim/bench.hpp"
#include "kronsim/qasm.hpp"

namespace {

using namespace kronsim;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

// Failure in the input data rather than on the command line.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AnsatzArgs {
  std::string name = "su2";
  int qubits = 4;
  int layers = 1;
  int range = 1;

  AnsatzSpec spec() const {
    const auto kind = ansatz_from_name(name);
    if (!kind) throw DataError("unknown ansatz '" + name + "'");
    return {*kind, qubits, layers, range};
  }
};

void add_ansatz_options(CLI::App* cmd, AnsatzArgs& a) {
  cmd->add_option("--ansatz", a.name, "su2 | sel (strongly entangling)")->capture_default_str();
  cmd->add_option("--qubits", a.qubits, "circuit width W")->capture_default_str()->check(CLI::Range(1, 30));
  cmd->add_option("--layers", a.layers, "ansatz layers")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--range", a.range, "entangler range (sel)")->capture_default_str()->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
  if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kronsim: batched state-vector simulator with gate caching and circuit splitting"};
  app.require_subcommand(1);

  // bench
  AnsatzArgs bench_ansatz;
  BenchConfig bench_cfg;
  std::vector<std::string> bench_modes{"cached", "naive"};
  std::string bench_split = "off";
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "timed training loop per execution mode, JSON lines");
  add_ansatz_options(bench, bench_ansatz);
  bench->add_option("--batch", bench_cfg.batch, "batch size B")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--repeats", bench_cfg.repeats, "timed repeats")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--passes", bench_cfg.passes, "passes per repeat")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--warmup", bench_cfg.warmup, "untimed warm-up passes")->capture_default_str()->check(CLI::NonNegativeNumber);
  bench->add_option("--mode", bench_modes, "cached, naive, split-<g>")->delimiter(',')->capture_default_str();
  bench->add_option("--split", bench_split, "add a split-<g> mode, or off")->capture_default_str();
  bench->add_option("--seed", bench_cfg.seed, "RNG seed")->capture_default_str();
  bench->add_option("--lr", bench_cfg.learning_rate, "gradient descent step")->capture_default_str();
  bench->add_flag("--remap", bench_cfg.remap.enabled, "tanh weight remapping");
  bench->add_option("--cache-budget", bench_cfg.cache_budget, "cache budget in complex entries")->capture_default_str();
  bench->add_option("--threads", bench_cfg.threads, "kernel threads, 0 = all available")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--out", bench_out, "output path (default stdout)");

  // split
  AnsatzArgs split_ansatz;
  std::string split_qasm;
  int split_g = 4;
  bool split_json = false;
  std::string split_out;
  auto* split = app.add_subcommand("split", "print the split plan and cache estimates");
  add_ansatz_options(split, split_ansatz);
  split->add_option("--qasm", split_qasm, "read the circuit from an OpenQASM 2.0 file");
  split->add_option("--split", split_g, "max group width g")->capture_default_str()->check(CLI::Range(2, 30));
  split->add_flag("--json", split_json, "JSON instead of text");
  split->add_option("--out", split_out, "output path (default stdout)");

  // landscape
  AnsatzArgs land_ansatz;
  land_ansatz.name = "sel";
  land_ansatz.qubits = 3;
  std::size_t land_grid = 64;
  std::uint64_t land_seed = 0;
  bool land_remap = false;
  std::string land_out;
  auto* landscape = app.add_subcommand("landscape", "absolute gradients per parameter over an angle grid, CSV");
  add_ansatz_options(landscape, land_ansatz);
  landscape->add_option("--grid", land_grid, "grid points over [-pi, pi]")->capture_default_str()->check(CLI::PositiveNumber);
  landscape->add_option("--seed", land_seed, "seed for the fixed parameters")->capture_default_str();
  landscape->add_flag("--remap", land_remap, "tanh weight remapping");
  landscape->add_option("--out", land_out, "output path (default stdout)");

  // qasm
  auto* qasm = app.add_subcommand("qasm", "OpenQASM 2.0 conversion");
  qasm->require_subcommand(1);
  std::string import_in, import_out;
  auto* qasm_import = qasm->add_subcommand("import", "QASM file to JSON circuit dump");
  qasm_import->add_option("input", import_in, "QASM file")->required();
  qasm_import->add_option("--out", import_out, "output path (default stdout)");
  AnsatzArgs export_ansatz;
  std::uint64_t export_seed = 0;
  bool export_random = false;
  std::string export_out;
  auto* qasm_export = qasm->add_subcommand("export", "ansatz to QASM");
  add_ansatz_options(qasm_export, export_ansatz);
  qasm_export->add_flag("--random", export_random, "random parameter values instead of zeros");
  qasm_export->add_option("--seed", export_seed, "seed for --random")->capture_default_str();
  qasm_export->add_option("--out", export_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*bench) {
      bench_cfg.circuit = bench_ansatz.spec();
      bench_cfg.modes.clear();
      for (const auto& label : bench_modes) {
        const auto m = bench_mode_from_label(label);
        if (!m) {
          std::cerr << "error: unknown mode '" << label << "'\n";
          return kUsageError;
        }
        bench_cfg.modes.push_back(*m);
      }
      if (bench_split != "off") {
        const auto m = bench_mode_from_label("split-" + bench_split);
        if (!m) {
          std::cerr << "error: --split expects an integer >= 2 or off\n";
          return kUsageError;
        }
        bench_cfg.modes.push_back(*m);
      }
      std::string lines;
      for (const auto& rec : run_bench(bench_cfg)) lines += to_json(rec).dump() + "\n";
      write_output(bench_out, lines);
    } else if (*split) {
      const Circuit c = split_qasm.empty() ? build_ansatz(split_ansatz.spec()) : parse_qasm(read_file(split_qasm));
      const auto report = split_report(c, split_g);
      write_output(split_out, split_json ? to_json(report).dump(2) + "\n" : to_text(report));
    } else if (*landscape) {
      auto c = build_ansatz(land_ansatz.spec());
      randomize_params(c.params, land_seed);
      const RemapConfig cfg{.enabled = land_remap};
      write_output(land_out, landscape_csv(gradient_landscape(c, c.params, LossSpec{}, cfg, landscape_grid(land_grid))));
    } else if (*qasm_import) {
      const auto c = parse_qasm(read_file(import_in));
      write_output(import_out, circuit_to_json(c).dump(2) + "\n");
    } else if (*qasm_export) {
      auto c = build_ansatz(export_ansatz.spec());
      if (export_random) randomize_params(c.params, export_seed);
      write_output(export_out, export_qasm(c));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}
