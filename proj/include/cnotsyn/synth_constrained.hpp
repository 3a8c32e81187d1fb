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

// Synthesis under a connectivity graph.
//
// Qubits are processed in the order given by a QubitOrdering. Internally
// everything happens in "rank space", where wire r is the node of rank r;
// results are mapped back to node labels at the end.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/circuit.hpp"
#include "cnotsyn/deadline.hpp"
#include "cnotsyn/ordering.hpp"
#include "cnotsyn/syndrome.hpp"
#include "cnotsyn/topology.hpp"

namespace cnotsyn {

/// Adds row path.front() to row path.back(); every other row is restored.
/// max(1, 4k) gates for k intermediate nodes. Throws ContractViolation if
/// the path is shorter than 2 nodes or repeats a node, and, when `g` is
/// given, if consecutive nodes are not adjacent.
std::vector<CnotGate> cnot_via_path(const Path& path,
                                    const ConnectivityGraph* g = nullptr);

/// Adds row path.front() plus the rows of the intermediates selected by
/// `mask` (mask[i] for path[i + 1]) to row path.back(), restoring every
/// other row. Gate count is fanin_cost(path.size() - 2, mask).
std::vector<CnotGate> fanin_via_path(const Path& path,
                                     const std::vector<bool>& mask,
                                     const ConnectivityGraph* g = nullptr);

/// 2k + 1, plus 2 per unselected intermediate, minus 1 if the unselected
/// one is the last intermediate (next to the target).
Cost fanin_cost(const std::vector<bool>& mask);

/// Graph whose node r is node o.node(r) of g.
ConnectivityGraph relabel_graph(const ConnectivityGraph& g, const QubitOrdering& o);

/// One candidate parity for the target row, with the template producing it.
/// In rank space, `parity` lists which of the current rows 0..k-1 the
/// template adds to row k.
struct WeightedParity {
  BitVector parity;
  Cost cost = 0;
  Path path;               // source first, target last
  std::vector<bool> mask;  // over the intermediates
};

struct ParityTable {
  SyndromeInstance instance;  // column j is parities[j].parity
  std::vector<WeightedParity> parities;
};

/// Templates toward target rank k of a rank-space graph `gr`: for every
/// source below k, up to `sp_max` shortest paths inside the ranks 0..k, each
/// with the full mask, the empty mask (a routed CNOT), and with lc_max > 1 the
/// lc_max - 1 cheapest other masks. `parity` marks the rows the template
/// reads (source and selected intermediates). Not deduplicated.
std::vector<WeightedParity> enumerate_templates(const ConnectivityGraph& gr,
                                                std::size_t k, std::size_t sp_max,
                                                std::size_t lc_max);

/// enumerate_templates with equal parities merged, keeping the cheapest
/// template. The instance target is left zero.
ParityTable enumerate_parities(const ConnectivityGraph& gr, std::size_t k,
                               std::size_t sp_max, std::size_t lc_max);

/// Layered heuristic: with d the distance to k inside ranks 0..k, repeatedly
/// clears the farthest ones of `t` with full-mask templates from those
/// sources, preferring the result with fewer ones (then cheaper, then lower
/// index). Returns the indices into `table.parities` used.
std::vector<std::size_t> fast_heuristic_step(const ConnectivityGraph& gr,
                                             std::size_t k, const BitVector& t,
                                             const ParityTable& table);

struct ConstrainedConfig {
  enum class Solver { kWeightedGreedy, kFast, kExact };
  enum class Mode { kExact, kUpToPermutation };
  /// kHistory offers every parity seen along the circuit built so far and
  /// inserts templates where their parity is live; kCurrent only offers the
  /// current rows and appends templates at the end.
  enum class Harvest { kHistory, kCurrent };

  std::size_t sp_max = kUnbounded;
  std::size_t lc_max = 1;
  std::size_t niter = 1;
  std::size_t niter_syndrome = 1;
  Solver solver = Solver::kWeightedGreedy;
  std::optional<QubitOrdering> ordering;  // default: snake on grids, else identity
  bool use_symmetries = false;
  Mode mode = Mode::kExact;
  Harvest harvest = Harvest::kHistory;
  std::uint64_t seed = 0;
  std::uint64_t exact_budget = 200'000;
  Deadline deadline;

  void validate() const;
  static Solver parse_solver(const std::string& text);
  static std::string solver_name(Solver s);
  static Mode parse_mode(const std::string& text);
  static std::string mode_name(Mode m);
  static Harvest parse_harvest(const std::string& text);
  static std::string harvest_name(Harvest h);
};

/// Ordering used when the config leaves it unset.
QubitOrdering default_ordering(const ConnectivityGraph& g);

/// `l` must be unit lower triangular after conjugation by the ordering. The
/// result is graph compliant and simulates to `l`.
CnotCircuit synth_triangular_constrained(const BitMatrix& l,
                                         const ConnectivityGraph& g,
                                         const ConstrainedConfig& cfg);

/// Circuit C with every leading minor of simulate(C) * a invertible, after
/// conjugation by the ordering. Gates are routed inside the ranks >= k.
CnotCircuit compute_precircuit(const BitMatrix& a, const ConnectivityGraph& g,
                               const QubitOrdering& o);

struct ConstrainedResult {
  CnotCircuit circuit;
  /// Row i of the input ends up on wire output_wire[i] (identity in exact
  /// mode).
  std::vector<std::size_t> output_wire;
  QubitOrdering ordering;  // the variant that produced the circuit
  bool timed_out = false;
};

ConstrainedResult synth_general_constrained(const BitMatrix& a,
                                            const ConnectivityGraph& g,
                                            const ConstrainedConfig& cfg);

}  // namespace cnotsyn
