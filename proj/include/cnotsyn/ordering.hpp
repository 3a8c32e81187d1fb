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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cnotsyn/topology.hpp"

namespace cnotsyn {

/// Bijection between hardware nodes and synthesis ranks 0..n-1.
class QubitOrdering {
 public:
  QubitOrdering() = default;
  /// node_at[r] is the node processed r-th. Throws ContractViolation if not a
  /// permutation.
  static QubitOrdering from_sequence(std::vector<Node> node_at);
  static QubitOrdering from_ranks(std::vector<std::size_t> rank_of);
  static QubitOrdering identity(std::size_t n);

  std::size_t size() const { return node_at_.size(); }
  std::size_t rank(Node u) const { return rank_of_[u]; }
  Node node(std::size_t r) const { return node_at_[r]; }
  const std::vector<Node>& sequence() const { return node_at_; }
  const std::vector<std::size_t>& ranks() const { return rank_of_; }

  bool operator==(const QubitOrdering&) const = default;

 private:
  std::vector<std::size_t> rank_of_;
  std::vector<Node> node_at_;
};

/// Every set of the first k ranks induces a connected subgraph.
bool prefix_connected(const QubitOrdering& o, const ConnectivityGraph& g);
/// Every set of the last k ranks induces a connected subgraph.
bool suffix_connected(const QubitOrdering& o, const ConnectivityGraph& g);
/// Throws ContractViolation unless sizes agree and both properties hold.
void require_synthesis_ordering(const QubitOrdering& o,
                                const ConnectivityGraph& g);

/// Row-major boustrophedon over a grid-shaped graph, starting top-left.
QubitOrdering snake(const ConnectivityGraph& g);

/// Images of `o` under the symmetries of the grid (rotations and
/// reflections when square, reflections otherwise). For a non-square grid
/// and a row snake, column snakes are added as well. Duplicates removed,
/// first occurrence kept, `o` first.
std::vector<QubitOrdering> symmetry_variants(const QubitOrdering& o,
                                             const ConnectivityGraph& g);

/// Sum over node pairs u < v of weights[u * n + v] * |rank(u) - rank(v)|.
double objective_minla(const QubitOrdering& o, std::span<const double> weights);
/// Per-distance breakdown: entry d is the sum of |rank(u) - rank(v)| over
/// pairs at hop distance d.
std::vector<std::uint64_t> minla_profile(const QubitOrdering& o,
                                         const ConnectivityGraph& g);
/// n x n weights with w[u * n + v] = by_distance[d(u, v)].
std::vector<double> distance_weights(const ConnectivityGraph& g,
                                     std::span<const double> by_distance);

/// Sum over pairs u < v of d(u, v) * exp(-|rank(u) - rank(v)|).
double objective_exp(const QubitOrdering& o, const ConnectivityGraph& g);

/// Pairwise objective: total = sum over u < v of pair_cost(u, v, gap) with
/// gap = |rank(u) - rank(v)|.
using PairCost = std::function<double(Node, Node, std::size_t)>;
PairCost minla_pair_cost(std::vector<double> weights, std::size_t n);
PairCost exp_pair_cost(const ConnectivityGraph& g);
double evaluate(const QubitOrdering& o, const PairCost& cost);

/// Best-swap descent from `restarts` random permutations. Each step applies
/// the rank swap with the lowest resulting cost (lexicographic on ties)
/// while it strictly improves. Returns the best local optimum.
QubitOrdering local_search(std::size_t n, const PairCost& cost,
                           std::size_t restarts, std::uint64_t seed);

}  // namespace cnotsyn
