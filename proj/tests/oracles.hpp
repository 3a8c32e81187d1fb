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

// Independent reference implementations used as test oracles. They work on
// plain nested vectors and share no code with the library beyond the types
// they convert from.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/circuit.hpp"
#include "cnotsyn/syndrome.hpp"
#include "cnotsyn/topology.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

Dense dense(const cnotsyn::BitMatrix& m);
cnotsyn::BitMatrix packed(const Dense& d);

Dense identity(std::size_t n);
Dense multiply(const Dense& a, const Dense& b);
std::size_t rank(Dense d);

/// Applies row[t] ^= row[c] gate by gate.
Dense simulate(const cnotsyn::CnotCircuit& c);

/// I with a single extra one at (target, source).
Dense transvection(std::size_t n, std::size_t source, std::size_t target);

/// Minimum total cost over all column subsets hitting the target; nullopt
/// when infeasible. m must stay small.
std::optional<cnotsyn::Cost> brute_force_decode(const cnotsyn::SyndromeInstance& inst);

/// Number of shortest u-v paths by dynamic programming over BFS layers.
std::size_t count_shortest_paths(const cnotsyn::ConnectivityGraph& g, std::size_t u,
                                 std::size_t v);

/// Uniformly random invertible matrix by rejection sampling.
cnotsyn::BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng);
/// Random unit lower triangular matrix with density one half.
cnotsyn::BitMatrix random_lower(std::size_t n, std::mt19937_64& rng);
cnotsyn::SyndromeInstance random_instance(std::size_t n, std::size_t m, bool weighted,
                                          bool with_units, std::mt19937_64& rng);

}  // namespace oracle
