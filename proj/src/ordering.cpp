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

#include "cnotsyn/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/errors.hpp"
#include "cnotsyn/rng.hpp"

namespace cnotsyn {

QubitOrdering QubitOrdering::from_sequence(std::vector<Node> node_at) {
  if (!is_permutation(node_at))
    throw ContractViolation("ordering: not a permutation of the nodes");
  QubitOrdering o;
  o.rank_of_ = invert_permutation(node_at);
  o.node_at_ = std::move(node_at);
  return o;
}

QubitOrdering QubitOrdering::from_ranks(std::vector<std::size_t> rank_of) {
  if (!is_permutation(rank_of))
    throw ContractViolation("ordering: ranks are not a permutation");
  return from_sequence(invert_permutation(rank_of));
}

QubitOrdering QubitOrdering::identity(std::size_t n) {
  std::vector<Node> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return from_sequence(std::move(seq));
}

namespace {

bool growing_sets_connected(const ConnectivityGraph& g,
                            const std::vector<Node>& seq) {
  // Adding nodes one at a time keeps the set connected iff each new node
  // touches an earlier one.
  std::vector<bool> in(g.size(), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Node u = seq[i];
    if (i > 0) {
      const auto nb = g.neighbors(u);
      if (std::none_of(nb.begin(), nb.end(), [&](Node v) { return in[v]; }))
        return false;
    }
    in[u] = true;
  }
  return true;
}

}  // namespace

bool prefix_connected(const QubitOrdering& o, const ConnectivityGraph& g) {
  return o.size() == g.size() && growing_sets_connected(g, o.sequence());
}

bool suffix_connected(const QubitOrdering& o, const ConnectivityGraph& g) {
  std::vector<Node> rev(o.sequence().rbegin(), o.sequence().rend());
  return o.size() == g.size() && growing_sets_connected(g, rev);
}

void require_synthesis_ordering(const QubitOrdering& o,
                                const ConnectivityGraph& g) {
  if (o.size() != g.size())
    throw ContractViolation("ordering size differs from the graph");
  if (!prefix_connected(o, g))
    throw ContractViolation("ordering: some prefix is not connected");
  if (!suffix_connected(o, g))
    throw ContractViolation("ordering: some suffix is not connected");
}

namespace {

std::vector<Node> row_snake(std::size_t rows, std::size_t cols) {
  std::vector<Node> seq;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < cols; ++k)
      seq.push_back(r * cols + (r % 2 == 0 ? k : cols - 1 - k));
  return seq;
}

std::vector<Node> column_snake(std::size_t rows, std::size_t cols) {
  std::vector<Node> seq;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t k = 0; k < rows; ++k)
      seq.push_back((c % 2 == 0 ? k : rows - 1 - k) * cols + c);
  return seq;
}

const GridShape& require_grid(const ConnectivityGraph& g) {
  if (!g.grid() || g.grid()->rows * g.grid()->cols != g.size())
    throw ContractViolation("ordering: graph is not grid shaped");
  return *g.grid();
}

}  // namespace

QubitOrdering snake(const ConnectivityGraph& g) {
  const auto& shape = require_grid(g);
  return QubitOrdering::from_sequence(row_snake(shape.rows, shape.cols));
}

std::vector<QubitOrdering> symmetry_variants(const QubitOrdering& o,
                                             const ConnectivityGraph& g) {
  const auto& shape = require_grid(g);
  const std::size_t rows = shape.rows;
  const std::size_t cols = shape.cols;
  using Map = std::function<Node(std::size_t, std::size_t)>;
  std::vector<Map> maps = {
      [&](std::size_t r, std::size_t c) { return r * cols + c; },
      [&](std::size_t r, std::size_t c) { return r * cols + (cols - 1 - c); },
      [&](std::size_t r, std::size_t c) { return (rows - 1 - r) * cols + c; },
      [&](std::size_t r, std::size_t c) {
        return (rows - 1 - r) * cols + (cols - 1 - c);
      }};
  if (rows == cols) {
    // Transpose composed with the four reflections.
    maps.push_back([&](std::size_t r, std::size_t c) { return c * cols + r; });
    maps.push_back(
        [&](std::size_t r, std::size_t c) { return c * cols + (cols - 1 - r); });
    maps.push_back(
        [&](std::size_t r, std::size_t c) { return (rows - 1 - c) * cols + r; });
    maps.push_back([&](std::size_t r, std::size_t c) {
      return (rows - 1 - c) * cols + (cols - 1 - r);
    });
  }

  std::vector<std::vector<Node>> bases = {o.sequence()};
  if (rows != cols && o.sequence() == row_snake(rows, cols))
    bases.push_back(column_snake(rows, cols));

  std::vector<QubitOrdering> out;
  for (const auto& base : bases) {
    for (const auto& map : maps) {
      std::vector<Node> seq(base.size());
      for (std::size_t i = 0; i < base.size(); ++i)
        seq[i] = map(base[i] / cols, base[i] % cols);
      auto v = QubitOrdering::from_sequence(std::move(seq));
      if (std::find(out.begin(), out.end(), v) == out.end())
        out.push_back(std::move(v));
    }
  }
  return out;
}

double objective_minla(const QubitOrdering& o, std::span<const double> weights) {
  const std::size_t n = o.size();
  if (weights.size() != n * n)
    throw ContractViolation("objective_minla: expected n*n weights");
  double total = 0.0;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) {
      const auto gap = static_cast<double>(
          std::max(o.rank(u), o.rank(v)) - std::min(o.rank(u), o.rank(v)));
      total += weights[u * n + v] * gap;
    }
  return total;
}

std::vector<std::uint64_t> minla_profile(const QubitOrdering& o,
                                         const ConnectivityGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> out(1, 0);
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) {
      const std::size_t d = g.distance(u, v);
      if (out.size() <= d) out.resize(d + 1, 0);
      out[d] += std::max(o.rank(u), o.rank(v)) - std::min(o.rank(u), o.rank(v));
    }
  return out;
}

std::vector<double> distance_weights(const ConnectivityGraph& g,
                                     std::span<const double> by_distance) {
  const std::size_t n = g.size();
  std::vector<double> w(n * n, 0.0);
  for (Node u = 0; u < n; ++u)
    for (Node v = 0; v < n; ++v) {
      if (u == v) continue;
      const std::size_t d = g.distance(u, v);
      if (d >= by_distance.size())
        throw ContractViolation("distance_weights: no weight for distance " +
                                std::to_string(d));
      w[u * n + v] = by_distance[d];
    }
  return w;
}

double objective_exp(const QubitOrdering& o, const ConnectivityGraph& g) {
  return evaluate(o, exp_pair_cost(g));
}

PairCost minla_pair_cost(std::vector<double> weights, std::size_t n) {
  if (weights.size() != n * n)
    throw ContractViolation("minla_pair_cost: expected n*n weights");
  return [w = std::move(weights), n](Node u, Node v, std::size_t gap) {
    return w[u * n + v] * static_cast<double>(gap);
  };
}

PairCost exp_pair_cost(const ConnectivityGraph& g) {
  return [&g](Node u, Node v, std::size_t gap) {
    return static_cast<double>(g.distance(u, v)) *
           std::exp(-static_cast<double>(gap));
  };
}

double evaluate(const QubitOrdering& o, const PairCost& cost) {
  const std::size_t n = o.size();
  double total = 0.0;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) {
      const std::size_t a = o.rank(u);
      const std::size_t b = o.rank(v);
      total += cost(u, v, a > b ? a - b : b - a);
    }
  return total;
}

namespace {

// Contribution of the pairs touching the nodes at ranks i and j, given the
// rank-to-node sequence.
double touching(const std::vector<Node>& seq, std::size_t i, std::size_t j,
                const PairCost& cost) {
  const std::size_t n = seq.size();
  auto term = [&](std::size_t a, std::size_t b) {
    const Node u = seq[a];
    const Node v = seq[b];
    return cost(std::min(u, v), std::max(u, v), a > b ? a - b : b - a);
  };
  double total = term(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    total += term(i, k) + term(j, k);
  }
  return total;
}

}  // namespace

QubitOrdering local_search(std::size_t n, const PairCost& cost,
                           std::size_t restarts, std::uint64_t seed) {
  if (restarts == 0) throw ContractViolation("local_search: restarts must be positive");
  if (n == 0) throw ContractViolation("local_search: empty ordering");
  constexpr double kEps = 1e-12;
  std::optional<QubitOrdering> best;
  double best_cost = 0.0;
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, {r}));
    std::vector<Node> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    rng.shuffle(std::span(seq));
    double current = evaluate(QubitOrdering::from_sequence(seq), cost);
    while (true) {
      double best_delta = -kEps * std::max(1.0, std::abs(current));
      std::size_t bi = n;
      std::size_t bj = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const double before = touching(seq, i, j, cost);
          std::swap(seq[i], seq[j]);
          const double delta = touching(seq, i, j, cost) - before;
          std::swap(seq[i], seq[j]);
          if (delta < best_delta) {
            best_delta = delta;
            bi = i;
            bj = j;
          }
        }
      if (bi == n) break;
      std::swap(seq[bi], seq[bj]);
      current += best_delta;
    }
    current = evaluate(QubitOrdering::from_sequence(seq), cost);
    if (!best || current < best_cost) {
      best = QubitOrdering::from_sequence(seq);
      best_cost = current;
    }
  }
  return *best;
}

}  // namespace cnotsyn
