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

// Synthesis with all-to-all connectivity, plus the two classical baselines.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/circuit.hpp"
#include "cnotsyn/deadline.hpp"
#include "cnotsyn/syndrome.hpp"

namespace cnotsyn {

struct SolverSpec {
  enum class Kind { kGreedy, kTree, kIsd, kExact };
  Kind kind = Kind::kGreedy;
  std::size_t width = kUnbounded;  // tree
  std::size_t depth = 1;           // tree
  std::size_t n_iter = 1;          // isd
  std::uint64_t budget = ExactOptions{}.node_budget;  // exact

  static SolverSpec greedy() { return {}; }
  static SolverSpec tree(std::size_t width, std::size_t depth) {
    return {Kind::kTree, width, depth, 1, ExactOptions{}.node_budget};
  }
  static SolverSpec isd(std::size_t n_iter) {
    return {Kind::kIsd, kUnbounded, 1, n_iter, ExactOptions{}.node_budget};
  }
  static SolverSpec exact(std::uint64_t budget = ExactOptions{}.node_budget) {
    return {Kind::kExact, kUnbounded, 1, 1, budget};
  }
  /// "greedy", "tree:W:D" (W may be "inf"), "isd:N", "exact[:BUDGET]".
  static SolverSpec parse(const std::string& text);
  std::string to_string() const;
};

struct SynthesisConfig {
  SolverSpec solver;
  std::size_t niter_syndrome = 1;
  std::uint64_t seed = 0;
  Deadline deadline;
};

/// Solves one instance with the configured decoder. With niter_syndrome > 1
/// the decoder is rerun in that many random bases and the best kept.
/// `stream` distinguishes instances for seeding.
SyndromeSolution decode(const SyndromeInstance& inst, const SynthesisConfig& cfg,
                        std::uint64_t stream);

struct ParityEntry {
  BitVector parity;
  std::size_t qubit = 0;
  std::size_t position = 0;  // number of gates executed before it is live
};

/// Parities held by qubits [0, k) along the circuit, in chronological order:
/// first the unit vectors at position 0, then one entry after each gate
/// targeting a qubit below k. Parities are truncated to their first k
/// entries. When `dedup` is set only the earliest occurrence is kept.
std::vector<ParityEntry> harvest_parities(const CnotCircuit& c, std::size_t k,
                                          bool dedup = true);

CnotCircuit synth_lower_triangular(const BitMatrix& l, const SynthesisConfig& cfg);

struct SynthesisResult {
  CnotCircuit circuit;
  /// Row i of the input ends up on wire output_wire[i].
  std::vector<std::size_t> output_wire;
};
SynthesisResult synth_general(const BitMatrix& a, const SynthesisConfig& cfg);

/// Matrix of a SynthesisResult: row i is row output_wire[i] of the circuit.
BitMatrix realized_operator(const SynthesisResult& r);

CnotCircuit gaussian_elimination(const BitMatrix& a);

/// Block-partitioned elimination with duplicate row-pattern removal.
/// partition_size 0 selects max(1, floor(log2(n) / 2)).
CnotCircuit pmh(const BitMatrix& a, std::size_t partition_size = 0);

}  // namespace cnotsyn
