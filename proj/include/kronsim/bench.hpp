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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kronsim/circuit.hpp"
#include "kronsim/executor.hpp"
#include "kronsim/gradients.hpp"
#include "kronsim/kron_cache.hpp"

namespace kronsim {

enum class AnsatzKind { SU2, StronglyEntangling };

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::SU2;
  int qubits = 4;
  int layers = 1;
  int range = 1;  // strongly entangling only
};

std::optional<AnsatzKind> ansatz_from_name(std::string_view name);
std::string_view ansatz_name(AnsatzKind kind);
Circuit build_ansatz(const AnsatzSpec& spec);

/// Uniform over [−π, π) from a seeded generator.
void randomize_params(ParamStore& params, std::uint64_t seed);

/// Execution strategy under benchmark. Split carries its group width.
struct BenchMode {
  ExecMode mode = ExecMode::Cached;
  int max_qubits = 0;

  std::string label() const;  // "cached", "naive", "split-3"
};

/// Parses "cached", "naive" or "split-<g>".
std::optional<BenchMode> bench_mode_from_label(std::string_view label);

struct BenchConfig {
  AnsatzSpec circuit;
  std::size_t batch = 16;
  int repeats = 15;
  int passes = 100;
  int warmup = 1;
  std::vector<BenchMode> modes{{ExecMode::Cached, 0}, {ExecMode::Naive, 0}};
  std::uint64_t seed = 0;
  double learning_rate = 0.1;
  RemapConfig remap;
  std::size_t cache_budget = kDefaultCacheBudget;
  int threads = 1;  // kernel threads; 0 = OpenMP default
};

struct BenchRecord {
  BenchConfig config;
  std::string mode;
  std::vector<double> seconds;      // one per repeat
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
  std::optional<std::uint64_t> peak_rss_bytes;
  std::vector<double> losses;       // per pass, last repeat
  std::size_t cache_entries = 0;
  int threads = 1;
  std::optional<std::string> error;
  StateVector final_state;          // not serialised
};

/// One training loop per repeat and mode: per pass, sample a batch of
/// embedding angles, run forward, take the parameter-shift gradient of the mean
/// ⟨Z⟩ loss, and apply a gradient-descent step. Warm-up passes are untimed.
/// A mode that cannot be built (e.g. over the cache budget) yields a record
/// with `error` set; the other modes still run.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

nlohmann::json to_json(const BenchRecord& record);

/// Peak resident set size of this process, when the platform reports it.
std::optional<std::uint64_t> peak_rss_bytes();

struct GroupEstimate {
  std::vector<int> qubits;
  std::size_t gate_count = 0;
  std::size_t parametric_gates = 0;
  int width = 0;
  std::uint64_t cache_bytes = 0;
};

/// Cache-size estimate for a split plan versus the unsplit circuit:
/// 2·4^g·16 bytes per parametric gate and 4^g·16 per fixed gate, at the group
/// width g (split) or the circuit width W (unsplit).
struct SplitReport {
  int width = 0;
  int max_qubits = 0;
  std::vector<GroupEstimate> groups;
  std::uint64_t split_bytes = 0;
  std::uint64_t unsplit_bytes = 0;
};

std::uint64_t estimated_cache_bytes(bool parametric, int width);
SplitReport split_report(const Circuit& circuit, int max_qubits);
std::string to_text(const SplitReport& report);
nlohmann::json to_json(const SplitReport& report);

/// Header row "param,<angle>...", then one row per parameter.
std::string landscape_csv(const Landscape& landscape);

nlohmann::json circuit_to_json(const Circuit& circuit);

}  // namespace kronsim
