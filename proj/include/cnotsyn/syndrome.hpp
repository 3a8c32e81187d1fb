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

// Solvers for the (weighted) syndrome decoding problem
//
//   minimize  sum_j costs[j] * x[j]   subject to   H x = s   over GF(2)
//
// where the columns of H are the parities available to the synthesizer and s
// is the parity still missing on the target wire. Unit costs give the plain
// Hamming-weight version.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/bit_vector.hpp"
#include "cnotsyn/deadline.hpp"
#include "cnotsyn/errors.hpp"
#include "cnotsyn/topology.hpp"

namespace cnotsyn {

using Cost = std::uint64_t;

/// m columns of n bits each, stored contiguously for fast scans.
class ColumnSet {
 public:
  explicit ColumnSet(std::size_t n_bits = 0)
      : n_bits_(n_bits), stride_(words_for(n_bits)) {}

  std::size_t bits() const { return n_bits_; }
  std::size_t size() const { return count_; }
  std::size_t stride() const { return stride_; }

  void reserve(std::size_t m) { data_.reserve(m * stride_); }
  void push_back(std::span<const Word> column);
  void push_back(const BitVector& column);

  std::span<const Word> operator[](std::size_t j) const {
    return {data_.data() + j * stride_, stride_};
  }
  std::span<Word> mutable_column(std::size_t j) {
    return {data_.data() + j * stride_, stride_};
  }
  BitVector vector(std::size_t j) const { return BitVector(n_bits_, (*this)[j]); }
  const Word* data() const { return data_.data(); }

 private:
  std::size_t n_bits_ = 0;
  std::size_t stride_ = 0;
  std::size_t count_ = 0;
  std::vector<Word> data_;
};

struct SyndromeInstance {
  ColumnSet columns;
  BitVector target;
  std::vector<Cost> costs;

  std::size_t n() const { return target.size(); }
  std::size_t m() const { return columns.size(); }

  /// Builds an instance; empty `costs` means unit costs.
  static SyndromeInstance make(const std::vector<BitVector>& columns,
                               BitVector target, std::vector<Cost> costs = {});
  /// Checks sizes; throws ContractViolation.
  void validate() const;
  /// True when every unit vector e_i appears among the columns.
  bool has_canonical_columns() const;
};

struct SyndromeSolution {
  std::vector<std::size_t> support;  // sorted column indices
  Cost weight = 0;                   // sum of costs over the support
};

SyndromeSolution make_solution(const SyndromeInstance& inst,
                               std::vector<std::size_t> support);
/// XOR of the selected columns equals the target and weight matches costs.
bool is_valid(const SyndromeInstance& inst, const SyndromeSolution& sol);

/// Thrown by solve_exact when the node budget runs out before optimality is
/// proven. Carries the best solution seen, if any.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::optional<SyndromeSolution> best)
      : Error("branch-and-bound node budget exhausted"),
        incumbent(std::move(best)) {}
  std::optional<SyndromeSolution> incumbent;
};

/// Repeatedly adds the column minimizing wt(column xor residual). Ties go to
/// the lowest index. If no column lowers the weight, the remainder is solved
/// by elimination (Infeasible when the target is outside the column span).
SyndromeSolution solve_greedy(const SyndromeInstance& inst);

/// Bounded lookahead search: at each step expands the `width` best columns
/// for `depth` levels and commits one step toward the best leaf.
/// depth == 1 reproduces solve_greedy.
SyndromeSolution solve_tree(const SyndromeInstance& inst, std::size_t width,
                            std::size_t depth);

/// Information set decoding: greedy decoding repeated in `n_iter` random
/// bases, keeping the lightest solution (earliest iteration on ties). The
/// first iteration uses the given basis when it contains the unit vectors.
SyndromeSolution solve_isd(const SyndromeInstance& inst, std::size_t n_iter,
                           std::uint64_t seed, const Deadline& deadline = {});

using Decoder = std::function<SyndromeSolution(const SyndromeInstance&)>;
/// Runs `decoder` in `n_iter` bases (the given one first when it holds the
/// unit vectors, then random information sets) and keeps the lightest
/// solution, mapped back to the original columns.
SyndromeSolution solve_in_random_bases(const SyndromeInstance& inst,
                                       std::size_t n_iter, std::uint64_t seed,
                                       const Deadline& deadline,
                                       const Decoder& decoder);

struct ExactOptions {
  std::uint64_t node_budget = 2'000'000;
  std::optional<SyndromeSolution> warm_start;
};

/// Branch and bound over column subsets; minimizes total cost.
SyndromeSolution solve_exact(const SyndromeInstance& inst,
                             const ExactOptions& options = {});

/// Weighted greedy: picks the column i minimizing costs[i] + bc(s xor col_i),
/// where bc(v) sums the cheapest unit-vector column cost over the ones of v.
/// Ties go to the lower cost, then the lower index. Requires every unit vector
/// among the columns.
SyndromeSolution solve_weighted_greedy(const SyndromeInstance& inst);

/// Weighted greedy repeated in random bases built from the cheapest columns.
SyndromeSolution solve_weighted_isd(const SyndromeInstance& inst,
                                    std::size_t n_iter, std::uint64_t seed,
                                    const Deadline& deadline = {});

/// Generator matrix G (m x (m-n)) with H G = 0, for H = (I | P).
struct GeneratorMatrix {
  BitMatrix matrix;
};
GeneratorMatrix generator_from_parities(const SyndromeInstance& inst);

/// Parities gathered chronologically: entry j >= n is the xor of the two
/// entries parents[j - n]. Each generator column marks one such triangle.
struct ParityGraph {
  std::size_t n_canonical = 0;
  std::vector<std::array<std::size_t, 2>> parents;
  GeneratorMatrix generator;
};
/// History must start with e_0..e_{n-1} in order.
ParityGraph parity_graph(const std::vector<BitVector>& history);

/// Change of basis x -> P x applied to packed vectors, via 8-bit lookup tables.
class BasisTransform {
 public:
  explicit BasisTransform(const BitMatrix& p);
  void apply(std::span<const Word> in, std::span<Word> out) const;
  /// Instance with every column and the target mapped through P.
  SyndromeInstance apply(const SyndromeInstance& inst) const;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t chunks_ = 0;
  std::vector<Word> tables_;  // chunks_ x 256 entries of stride_ words
};

/// Indices of n linearly independent columns, scanned in `order`; fewer when
/// the columns do not span the full space.
std::vector<std::size_t> information_set(const SyndromeInstance& inst,
                                         std::span<const std::size_t> order);

}  // namespace cnotsyn
