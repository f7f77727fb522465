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

#include "kronsim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include <sys/resource.h>

#include "kronsim/kernels.hpp"
#include "kronsim/splitter.hpp"

namespace kronsim {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct PassRunner {
  const Executor& exec;
  const EmbeddingLayer& embed;
  const BenchConfig& cfg;

  // Runs `passes` training passes from the seeded initial weights.
  void run(int passes, std::vector<double>* losses, StateVector* final_state) const {
    std::mt19937_64 rng(cfg.seed);
    ParamStore params = exec.circuit().params;
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (std::size_t i = 0; i < params.size(); ++i) params[i].value = angle(rng);

    // Features in [0, pi). A full-circle range averages every wire to the
    // maximally mixed state, which leaves nothing for the weights to learn.
    std::uniform_real_distribution<double> feature(0.0, std::numbers::pi);
    const int w = exec.circuit().num_qubits;
    const LossSpec loss;
    std::vector<double> inputs(cfg.batch * static_cast<std::size_t>(w));
    for (int p = 0; p < passes; ++p) {
      for (auto& x : inputs) x = feature(rng);
      const StateVector encoded = embed.forward(inputs, zero_state(w, cfg.batch));
      auto lg = param_shift(exec, params, loss, cfg.remap, encoded);
      for (std::size_t i = 0; i < params.size(); ++i) params[i].value -= cfg.learning_rate * lg.gradient[i];
      if (losses) losses->push_back(lg.loss);
      if (final_state && p + 1 == passes) *final_state = std::move(lg.final_state);
    }
  }
};

}  // namespace

std::optional<AnsatzKind> ansatz_from_name(std::string_view name) {
  if (name == "su2") return AnsatzKind::SU2;
  if (name == "sel" || name == "strongly-entangling") return AnsatzKind::StronglyEntangling;
  return std::nullopt;
}

std::string_view ansatz_name(AnsatzKind kind) { return kind == AnsatzKind::SU2 ? "su2" : "sel"; }

Circuit build_ansatz(const AnsatzSpec& spec) {
  return spec.kind == AnsatzKind::SU2 ? ansatz_su2(spec.qubits, spec.layers)
                                      : ansatz_strongly_entangling(spec.qubits, spec.layers, spec.range);
}

void randomize_params(ParamStore& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t i = 0; i < params.size(); ++i) params[i].value = angle(rng);
}

std::string BenchMode::label() const {
  if (mode == ExecMode::Split) return "split-" + std::to_string(max_qubits);
  return std::string(mode_name(mode));
}

std::optional<BenchMode> bench_mode_from_label(std::string_view label) {
  if (label == "cached") return BenchMode{ExecMode::Cached, 0};
  if (label == "naive") return BenchMode{ExecMode::Naive, 0};
  if (label.starts_with("split-")) {
    const auto digits = label.substr(6);
    int g = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return std::nullopt;
      g = g * 10 + (c - '0');
      if (g > 64) return std::nullopt;
    }
    if (digits.empty() || g < 2) return std::nullopt;
    return BenchMode{ExecMode::Split, g};
  }
  return std::nullopt;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.repeats < 1) throw InvalidArgument("bench: repeats must be at least 1");
  if (cfg.passes < 1) throw InvalidArgument("bench: passes must be at least 1");
  if (cfg.warmup < 0) throw InvalidArgument("bench: warmup must be non-negative");
  if (cfg.batch < 1) throw InvalidArgument("bench: batch must be at least 1");
  const Circuit circuit = build_ansatz(cfg.circuit);
  kernels::set_num_threads(cfg.threads);
  const int threads = kernels::max_threads();

  std::vector<BenchRecord> records;
  for (const auto& mode : cfg.modes) {
    BenchRecord rec;
    rec.config = cfg;
    rec.mode = mode.label();
    rec.threads = threads;
    try {
      ExecOptions opts;
      opts.mode = mode.mode;
      opts.max_qubits = mode.max_qubits;
      opts.cache_budget = cfg.cache_budget;
      const Executor exec(circuit, opts);
      const EmbeddingLayer embed(std::vector<GateKind>(static_cast<std::size_t>(circuit.num_qubits), GateKind::RX),
                                 mode.mode, cfg.cache_budget);
      rec.cache_entries = exec.cache_entries();
      const PassRunner runner{exec, embed, cfg};
      if (cfg.warmup > 0) runner.run(cfg.warmup, nullptr, nullptr);
      for (int r = 0; r < cfg.repeats; ++r) {
        std::vector<double> losses;
        const bool last = r + 1 == cfg.repeats;
        const auto t0 = std::chrono::steady_clock::now();
        runner.run(cfg.passes, last ? &losses : nullptr, last ? &rec.final_state : nullptr);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        rec.seconds.push_back(dt.count());
        if (last) rec.losses = std::move(losses);
      }
      rec.mean_seconds = std::accumulate(rec.seconds.begin(), rec.seconds.end(), 0.0) /
                         static_cast<double>(rec.seconds.size());
      rec.min_seconds = *std::min_element(rec.seconds.begin(), rec.seconds.end());
    } catch (const CacheBudgetExceeded& e) {
      rec.error = e.what();
    }
    rec.peak_rss_bytes = peak_rss_bytes();
    records.push_back(std::move(rec));
  }
  kernels::set_num_threads(0);
  return records;
}

nlohmann::json to_json(const BenchRecord& rec) {
  const auto& c = rec.config;
  nlohmann::json j;
  j["mode"] = rec.mode;
  j["ansatz"] = ansatz_name(c.circuit.kind);
  j["qubits"] = c.circuit.qubits;
  j["layers"] = c.circuit.layers;
  j["batch"] = c.batch;
  j["repeats"] = c.repeats;
  j["passes"] = c.passes;
  j["warmup"] = c.warmup;
  j["seed"] = c.seed;
  j["learning_rate"] = c.learning_rate;
  j["remap"] = c.remap.enabled;
  j["threads"] = rec.threads;
  j["cache_budget_entries"] = c.cache_budget;
  if (rec.error) {
    j["error"] = *rec.error;
  } else {
    j["seconds"] = rec.seconds;
    j["mean_seconds"] = rec.mean_seconds;
    j["min_seconds"] = rec.min_seconds;
    j["cache_entries"] = rec.cache_entries;
    j["losses"] = rec.losses;
  }
  if (rec.peak_rss_bytes)
    j["peak_rss_bytes"] = *rec.peak_rss_bytes;
  else
    j["peak_rss_bytes"] = "unavailable";
  return j;
}

std::optional<std::uint64_t> peak_rss_bytes() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0 || usage.ru_maxrss <= 0) return std::nullopt;
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;  // kilobytes on Linux
}

std::uint64_t estimated_cache_bytes(bool parametric, int width) {
  return static_cast<std::uint64_t>(expanded_entries(parametric, width)) * sizeof(Complex);
}

SplitReport split_report(const Circuit& circuit, int max_qubits) {
  require_valid(circuit);
  const SplitPlan plan = split_circuit(circuit, max_qubits);
  SplitReport rep;
  rep.width = circuit.num_qubits;
  rep.max_qubits = max_qubits;
  for (const auto& grp : plan.groups) {
    GroupEstimate est;
    est.qubits = grp.qubits;
    est.gate_count = grp.gates.size();
    est.width = grp.width();
    for (std::size_t g : grp.gates) {
      const bool p = is_parametric(circuit.gates[g].kind);
      est.parametric_gates += p;
      est.cache_bytes += estimated_cache_bytes(p, est.width);
    }
    rep.split_bytes += est.cache_bytes;
    rep.groups.push_back(std::move(est));
  }
  for (const auto& gate : circuit.gates)
    rep.unsplit_bytes += estimated_cache_bytes(is_parametric(gate.kind), circuit.num_qubits);
  return rep;
}

std::string to_text(const SplitReport& rep) {
  std::ostringstream os;
  os << "circuit width " << rep.width << ", max group width " << rep.max_qubits << ", "
     << rep.groups.size() << " groups\n";
  for (std::size_t i = 0; i < rep.groups.size(); ++i) {
    const auto& g = rep.groups[i];
    os << "group " << i << ": qubits {";
    for (std::size_t k = 0; k < g.qubits.size(); ++k) os << (k ? "," : "") << g.qubits[k];
    os << "} width " << g.width << ", " << g.gate_count << " gates (" << g.parametric_gates
       << " parametric), cache " << g.cache_bytes << " bytes\n";
  }
  os << "split cache estimate: " << rep.split_bytes << " bytes\n";
  os << "unsplit cache estimate: " << rep.unsplit_bytes << " bytes\n";
  return os.str();
}

nlohmann::json to_json(const SplitReport& rep) {
  nlohmann::json j;
  j["width"] = rep.width;
  j["max_qubits"] = rep.max_qubits;
  j["split_bytes"] = rep.split_bytes;
  j["unsplit_bytes"] = rep.unsplit_bytes;
  j["groups"] = nlohmann::json::array();
  for (const auto& g : rep.groups)
    j["groups"].push_back({{"qubits", g.qubits},
                           {"width", g.width},
                           {"gates", g.gate_count},
                           {"parametric_gates", g.parametric_gates},
                           {"cache_bytes", g.cache_bytes}});
  return j;
}

std::string landscape_csv(const Landscape& landscape) {
  std::string out = "param";
  for (double a : landscape.grid) out += "," + fmt17(a);
  out += '\n';
  for (std::size_t i = 0; i < landscape.values.size(); ++i) {
    out += std::to_string(i);
    for (double v : landscape.values[i]) out += "," + fmt17(v);
    out += '\n';
  }
  return out;
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json j;
  j["num_qubits"] = circuit.num_qubits;
  j["params"] = nlohmann::json::array();
  for (const auto& p : circuit.params)
    j["params"].push_back({{"name", p.name}, {"value", p.value}, {"remap", p.remap}});
  j["gates"] = nlohmann::json::array();
  for (const auto& g : circuit.gates) {
    nlohmann::json jg{{"kind", gate_name(g.kind)}, {"qubits", g.qubits}};
    if (g.angle) {
      if (const auto* p = std::get_if<ParamIndex>(&*g.angle))
        jg["param"] = circuit.params[p->value].name;
      else
        jg["angle"] = std::get<double>(*g.angle);
    }
    j["gates"].push_back(std::move(jg));
  }
  return j;
}

}  // namespace kronsim
