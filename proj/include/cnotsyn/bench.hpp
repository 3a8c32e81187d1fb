// Copyright 2026 The cnotsyn Authors
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

// Experiment harness.
//
// An experiment is described by a JSON object:
//
//   {
//     "experiment": "ratio_pmh",      // see below
//     "sizes": [16, 32, 60],          // qubit counts (all-to-all experiments)
//     "input_gates": [200, 400],      // input_size only
//     "architectures": ["grid:3x3"],  // constrained experiments
//     "extra_edges": [0, 15, 30],     // augment only
//     "methods": ["greedy", "isd:500"],
//     "operators": 20,
//     "niter": 100,                   // optional override of the tuned value
//     "time_limit_s": 600,
//     "references": {"grid:3x3": 61}, // optional, for saving columns
//     "seed": 1
//   }
//
// Experiments:
//   ratio_pmh, isd_sweep  dense random operators on all-to-all hardware,
//                         size ratio against pmh
//   input_size            operators of a fixed number of random input gates
//   table_exact           constrained synthesis, exact mode
//   table_perm            constrained synthesis, up to a final permutation
//   radius                table_exact over a list of radius lattices
//   augment               table_exact on random supersets of one base graph
//
// Operators depend on the master seed, n, the input gate count and the
// operator index only, so experiments sharing those see the same matrices.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cnotsyn {

struct ExperimentSpec {
  std::string experiment;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> input_gates;
  std::vector<std::string> architectures;
  std::vector<std::size_t> extra_edges;
  std::vector<std::string> methods;
  std::size_t operators = 20;
  std::optional<std::size_t> niter;
  double time_limit_s = 600;
  std::map<std::string, double> references;
  std::uint64_t seed = 1;

  /// Throws ParseError on malformed JSON, unknown keys or experiments, and
  /// ContractViolation when validate() fails.
  static ExperimentSpec from_json(std::string_view text);
  /// Fills per-experiment defaults and checks the fields the experiment
  /// needs. Architectures must resolve.
  void validate();
};

struct BenchRow {
  std::string experiment;
  std::string point;
  std::string method;
  std::size_t n = 0;
  double mean_size = 0;
  /// Mean of size / pmh size; all-to-all experiments only.
  std::optional<double> mean_ratio;
  /// 1 - size / baseline per operator. The baseline is pmh for all-to-all
  /// experiments and the reference mean for constrained ones.
  std::optional<double> min_saving;
  std::optional<double> max_saving;
  std::optional<double> positive_fraction;
  double mean_time_s = 0;
  std::size_t timeouts = 0;
  std::uint64_t seed = 0;
};

/// Seed of operator `index` among operators on n qubits built from
/// `input_gates` random gates.
std::uint64_t operator_seed(std::uint64_t master, std::size_t n,
                            std::size_t input_gates, std::size_t index);

/// Runs every (point, operator) pair on `workers` threads. Rows come out in
/// point order, then method order, independent of the worker count.
std::vector<BenchRow> run_experiment(ExperimentSpec spec, std::size_t workers);

std::string to_csv(const std::vector<BenchRow>& rows);

/// CNOTSYN_WORKERS when set and positive, else the hardware concurrency.
std::size_t default_workers();

}  // namespace cnotsyn
