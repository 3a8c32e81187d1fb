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

// Named architectures.
//
//   all:N              all-to-all connectivity on N qubits
//   line:N             nearest-neighbour line
//   grid:RxC           square lattice
//   grid_diag:RxC      square lattice with both diagonals in every cell
//   radius:RxC:D       lattice points joined when their distance is <= D;
//                      D is a number or sqrt(X)
//   ibm_qx5, rigetti_16q_aspen, ibm_q20_tokyo
//                      presets shipped in data/architectures
//   file:PATH          edge list file; PATH.order is used when present

#include <filesystem>
#include <optional>
#include <string>

#include "cnotsyn/ordering.hpp"
#include "cnotsyn/synth_constrained.hpp"
#include "cnotsyn/topology.hpp"

namespace cnotsyn {

struct Architecture {
  std::string name;
  ConnectivityGraph graph;
  bool all_to_all = false;
  QubitOrdering ordering;  // default synthesis ordering
};

/// Directory holding the preset files. CNOTSYN_DATA_DIR overrides the
/// compiled-in location.
std::filesystem::path data_directory();

Architecture make_architecture(const std::string& spec);

/// Tuned synthesis parameters for an architecture: restarts, decoder, path
/// limit and ordering, by size and lattice kind.
ConstrainedConfig tuned_config(const Architecture& arch);

}  // namespace cnotsyn
