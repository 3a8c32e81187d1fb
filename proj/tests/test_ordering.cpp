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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include "cnotsyn/errors.hpp"
#include "cnotsyn/ordering.hpp"

using namespace cnotsyn;

namespace {

QubitOrdering shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Node> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  std::shuffle(seq.begin(), seq.end(), rng);
  return QubitOrdering::from_sequence(seq);
}

double gap(const QubitOrdering& o, std::size_t u, std::size_t v) {
  return std::abs(static_cast<double>(o.rank(u)) - static_cast<double>(o.rank(v)));
}

}  // namespace

TEST_CASE("orderings are bijections") {
  const auto o = QubitOrdering::from_sequence({2, 0, 1});
  CHECK(o.rank(2) == 0);
  CHECK(o.node(2) == 1);
  CHECK(QubitOrdering::from_ranks({1, 2, 0}) == o);
  CHECK_THROWS_AS(QubitOrdering::from_sequence({0, 0, 1}), ContractViolation);
  CHECK_THROWS_AS(QubitOrdering::from_sequence({0, 3, 1}), ContractViolation);
}

TEST_CASE("snake") {
  CHECK(snake(grid(2, 2)).sequence() == std::vector<Node>{0, 1, 3, 2});
  CHECK(snake(grid(3, 3)).sequence() == std::vector<Node>{0, 1, 2, 5, 4, 3, 6, 7, 8});
  CHECK(snake(line(4)).sequence() == std::vector<Node>{0, 1, 2, 3});
  for (auto [r, c] : {std::pair{3, 3}, {4, 4}, {2, 5}, {5, 2}}) {
    const auto g = grid(r, c);
    CHECK(prefix_connected(snake(g), g));
    CHECK(suffix_connected(snake(g), g));
  }
}

TEST_CASE("prefix and suffix connectivity") {
  const auto g = grid(3, 3);
  const auto row_major = QubitOrdering::identity(9);
  CHECK(prefix_connected(row_major, g));
  CHECK(suffix_connected(row_major, g));
  // Opposite corners first break the prefix.
  const auto corners = QubitOrdering::from_sequence({0, 8, 1, 2, 3, 4, 5, 6, 7});
  CHECK_FALSE(prefix_connected(corners, g));
  const auto centre_first = QubitOrdering::from_sequence({4, 0, 1, 2, 3, 5, 6, 7, 8});
  CHECK(prefix_connected(QubitOrdering::from_sequence({4, 1, 0, 2, 5, 3, 6, 7, 8}), g));
  CHECK_FALSE(prefix_connected(centre_first, g));
  CHECK_THROWS_AS(require_synthesis_ordering(corners, g), ContractViolation);
  CHECK_THROWS_AS(require_synthesis_ordering(QubitOrdering::identity(4), g), ContractViolation);
  CHECK_NOTHROW(require_synthesis_ordering(snake(g), g));
}

TEST_CASE("symmetry variants") {
  const auto sq = grid(2, 2);
  const auto v = symmetry_variants(snake(sq), sq);
  CHECK(v.size() == 8);
  CHECK(v.front() == snake(sq));
  for (const auto& o : v) CHECK(prefix_connected(o, sq));

  const auto ln = grid(1, 5);
  const auto lv = symmetry_variants(snake(ln), ln);
  CHECK(lv.size() == 2);
  CHECK(lv[1].sequence() == std::vector<Node>{4, 3, 2, 1, 0});

  const auto rect = grid(2, 3);
  for (const auto& o : symmetry_variants(snake(rect), rect)) {
    CHECK(prefix_connected(o, rect));
    CHECK(suffix_connected(o, rect));
  }
}

TEST_CASE("objectives against direct sums") {
  std::mt19937_64 rng(31);
  const auto g = grid(3, 4);
  const std::size_t n = g.size();
  std::vector<double> w(n * n);
  for (auto& x : w) x = static_cast<double>(rng() % 7);
  for (int t = 0; t < 20; ++t) {
    const auto o = shuffled(n, rng);
    double minla = 0, expo = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        minla += w[u * n + v] * gap(o, u, v);
        expo += g.distance(u, v) * std::exp(-gap(o, u, v));
      }
    CHECK(objective_minla(o, w) == doctest::Approx(minla));
    CHECK(objective_exp(o, g) == doctest::Approx(expo));
    CHECK(evaluate(o, minla_pair_cost(w, n)) == doctest::Approx(minla));
    CHECK(evaluate(o, exp_pair_cost(g)) == doctest::Approx(expo));

    const auto profile = minla_profile(o, g);
    std::vector<std::uint64_t> direct(profile.size());
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        direct.at(g.distance(u, v)) += static_cast<std::uint64_t>(gap(o, u, v));
    CHECK(profile == direct);
  }
  const std::vector<double> by_d{0, 1, 10, 100, 1000, 1e4, 1e5};
  const auto dw = distance_weights(g, by_d);
  CHECK(dw[0 * n + 5] == by_d[g.distance(0, 5)]);
  CHECK(dw[3 * n + 3] == 0);
}

TEST_CASE("local search") {
  const auto g = grid(3, 3);
  const auto cost = exp_pair_cost(g);
  const auto a = local_search(9, cost, 20, 1);
  const auto b = local_search(9, cost, 20, 1);
  CHECK(a == b);
  CHECK(evaluate(a, cost) <= evaluate(snake(g), cost) + 1e-9);
  // Exhaustive minimum over all 9! orderings.
  std::vector<Node> seq(9);
  std::iota(seq.begin(), seq.end(), 0);
  double global = evaluate(QubitOrdering::from_sequence(seq), cost);
  while (std::next_permutation(seq.begin(), seq.end()))
    global = std::min(global, evaluate(QubitOrdering::from_sequence(seq), cost));
  CHECK(evaluate(a, cost) == doctest::Approx(global));
  // A local optimum: no single swap improves it.
  const double best = evaluate(a, cost);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j) {
      auto seq = a.sequence();
      std::swap(seq[i], seq[j]);
      CHECK(evaluate(QubitOrdering::from_sequence(seq), cost) >= best - 1e-9);
    }
  // On a line the identity and its reverse are the optima of minla.
  const auto ln = line(6);
  const auto w = distance_weights(ln, std::vector<double>{0, 1, 0, 0, 0, 0});
  const auto best_line = local_search(6, minla_pair_cost(w, 6), 20, 1);
  CHECK(objective_minla(best_line, w) == doctest::Approx(5.0));
}
