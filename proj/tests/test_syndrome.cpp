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

#include <random>

#include "cnotsyn/circuit.hpp"
#include "cnotsyn/syndrome.hpp"
#include "cnotsyn/synth_full.hpp"
#include "oracles.hpp"

using namespace cnotsyn;

namespace {

SyndromeInstance units_only(const std::string& target) {
  std::vector<BitVector> cols;
  for (std::size_t i = 0; i < target.size(); ++i) cols.push_back(BitVector::unit(target.size(), i));
  return SyndromeInstance::make(cols, BitVector::from_string(target));
}

BitMatrix parity_matrix(const SyndromeInstance& inst) {
  BitMatrix h(inst.n(), inst.m());
  for (std::size_t j = 0; j < inst.m(); ++j)
    for (std::size_t i : inst.columns.vector(j).ones()) h.set(i, j);
  return h;
}

}  // namespace

TEST_CASE("greedy") {
  const auto inst = units_only("10110");
  const auto sol = solve_greedy(inst);
  CHECK(sol.weight == 3);
  CHECK(sol.support == std::vector<std::size_t>{0, 2, 3});

  auto with_target = SyndromeInstance::make(
      {BitVector::from_string("100"), BitVector::from_string("010"), BitVector::from_string("001"),
       BitVector::from_string("111")},
      BitVector::from_string("111"));
  CHECK(solve_greedy(with_target).weight == 1);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto x = oracle::random_instance(8, 20, false, true, rng);
    const auto g = solve_greedy(x);
    CHECK(is_valid(x, g));
    CHECK(g.weight >= *oracle::brute_force_decode(x));
    CHECK(g.weight <= x.target.count());
  }
}

TEST_CASE("greedy falls back to elimination and reports infeasibility") {
  // No unit vectors, target in the span.
  auto spanned = SyndromeInstance::make(
      {BitVector::from_string("110"), BitVector::from_string("011"), BitVector::from_string("111")},
      BitVector::from_string("101"));
  const auto sol = solve_greedy(spanned);
  CHECK(is_valid(spanned, sol));
  auto outside = SyndromeInstance::make(
      {BitVector::from_string("110"), BitVector::from_string("011")}, BitVector::from_string("100"));
  CHECK_THROWS_AS(solve_greedy(outside), Infeasible);
  CHECK_THROWS_AS(solve_exact(outside), Infeasible);
}

TEST_CASE("tree search") {
  std::mt19937_64 rng(12);
  double tree_total = 0, greedy_total = 0;
  for (int t = 0; t < 50; ++t) {
    const auto x = oracle::random_instance(8, 20, false, true, rng);
    const auto g = solve_greedy(x);
    CHECK(solve_tree(x, kUnbounded, 1).support == g.support);
    const auto tr = solve_tree(x, 8, 4);
    CHECK(is_valid(x, tr));
    CHECK(tr.weight >= *oracle::brute_force_decode(x));
    tree_total += static_cast<double>(tr.weight);
    greedy_total += static_cast<double>(g.weight);
  }
  CHECK(tree_total <= greedy_total);
  CHECK_THROWS_AS(solve_tree(units_only("1"), 0, 1), ContractViolation);
}

TEST_CASE("information set decoding") {
  std::mt19937_64 rng(13);
  int matches = 0;
  for (int t = 0; t < 50; ++t) {
    const auto x = oracle::random_instance(10, 18, false, true, rng);
    CHECK(solve_isd(x, 1, 5).support == solve_greedy(x).support);
    const auto s = solve_isd(x, 1000, static_cast<std::uint64_t>(t));
    CHECK(is_valid(x, s));
    CHECK(s.weight <= solve_greedy(x).weight);
    if (s.weight == *oracle::brute_force_decode(x)) ++matches;
    CHECK(solve_isd(x, 50, 9).support == solve_isd(x, 50, 9).support);
  }
  MESSAGE("isd(1000) reached the optimum on " << matches << " of 50 instances");
  CHECK(matches >= 40);
}

TEST_CASE("exact solver") {
  const auto units = units_only("0110101");
  const auto u = solve_exact(units);
  CHECK(u.weight == 4);
  CHECK(u.support == std::vector<std::size_t>{1, 2, 4, 6});
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const bool weighted = t % 2 == 1;
    const auto x = oracle::random_instance(6 + rng() % 4, 8 + rng() % 8, weighted, t % 3 != 0, rng);
    const auto best = oracle::brute_force_decode(x);
    if (!best) {
      CHECK_THROWS_AS(solve_exact(x), Infeasible);
      continue;
    }
    const auto e = solve_exact(x);
    CHECK(is_valid(x, e));
    CHECK(e.weight == *best);
  }
  ExactOptions tiny;
  tiny.node_budget = 1;
  const auto hard = oracle::random_instance(12, 30, false, true, rng);
  CHECK_THROWS_AS(solve_exact(hard, tiny), BudgetExhausted);
}

TEST_CASE("weighted greedy") {
  auto exact_hit = SyndromeInstance::make(
      {BitVector::from_string("100"), BitVector::from_string("010"), BitVector::from_string("001"),
       BitVector::from_string("011")},
      BitVector::from_string("011"));
  const auto hit = solve_weighted_greedy(exact_hit);
  CHECK(hit.weight == 1);
  CHECK(hit.support == std::vector<std::size_t>{3});

  // e_0 costs 5 as a unit column but a duplicate costs 3.
  auto dominated = SyndromeInstance::make(
      {BitVector::from_string("10"), BitVector::from_string("01"), BitVector::from_string("10")},
      BitVector::from_string("10"), {5, 1, 3});
  const auto d = solve_weighted_greedy(dominated);
  CHECK(d.weight == 3);
  CHECK(d.support == std::vector<std::size_t>{2});

  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    const auto x = oracle::random_instance(8, 18, true, true, rng);
    const auto w = solve_weighted_greedy(x);
    CHECK(is_valid(x, w));
    CHECK(w.weight >= *oracle::brute_force_decode(x));
    const auto i = solve_weighted_isd(x, 30, 4);
    CHECK(is_valid(x, i));
    CHECK(i.weight <= w.weight);
  }
  auto missing = SyndromeInstance::make({BitVector::from_string("11")}, BitVector::from_string("11"));
  CHECK_THROWS_AS(solve_weighted_greedy(missing), ContractViolation);
}

TEST_CASE("random bases with a custom decoder") {
  std::mt19937_64 rng(16);
  const auto x = oracle::random_instance(8, 20, false, true, rng);
  std::size_t calls = 0;
  const auto s = solve_in_random_bases(x, 7, 3, {}, [&](const SyndromeInstance& y) {
    ++calls;
    return solve_greedy(y);
  });
  CHECK(calls == 7);
  CHECK(is_valid(x, s));
}

TEST_CASE("generator matrices") {
  CHECK(generator_from_parities(units_only("000")).matrix.cols() == 0);
  auto two = SyndromeInstance::make(
      {BitVector::from_string("10"), BitVector::from_string("01"), BitVector::from_string("11")},
      BitVector::from_string("00"));
  const auto g = generator_from_parities(two);
  CHECK(g.matrix == BitMatrix::from_strings({"1", "1", "1"}));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto x = oracle::random_instance(7, 19, false, true, rng);
    const auto gm = generator_from_parities(x).matrix;
    CHECK(gm.rows() == 19);
    CHECK(gm.cols() == 12);
    CHECK(rank(gm) == 12);
    CHECK(oracle::multiply(oracle::dense(parity_matrix(x)), oracle::dense(gm)) ==
          oracle::Dense(7, std::vector<int>(12)));
  }
  auto shuffled = SyndromeInstance::make(
      {BitVector::from_string("01"), BitVector::from_string("10")}, BitVector::from_string("00"));
  CHECK_THROWS_AS(generator_from_parities(shuffled), ContractViolation);
}

TEST_CASE("parity graphs") {
  const std::vector<BitVector> units{BitVector::from_string("100"), BitVector::from_string("010"),
                                     BitVector::from_string("001")};
  const auto plain = parity_graph(units);
  CHECK(plain.parents.empty());
  CHECK(plain.generator.matrix.cols() == 0);

  const auto tri = parity_graph({BitVector::from_string("10"), BitVector::from_string("01"),
                                 BitVector::from_string("11")});
  REQUIRE(tri.parents.size() == 1);
  CHECK(tri.generator.matrix == BitMatrix::from_strings({"1", "1", "1"}));

  // Chronological parities of a random circuit; each new one comes from
  // exactly two earlier ones.
  const CnotCircuit c = random_circuit(4, 12, 21);
  std::vector<BitVector> history;
  for (const auto& e : harvest_parities(c, 4, false)) history.push_back(e.parity);
  const auto pg = parity_graph(history);
  CHECK(pg.parents.size() == history.size() - 4);
  for (std::size_t j = 0; j < pg.parents.size(); ++j) {
    const auto [a, b] = pg.parents[j];
    CHECK(a < 4 + j);
    CHECK(b < 4 + j);
    CHECK((history[a] ^ history[b]) == history[4 + j]);
  }
  const auto inst = SyndromeInstance::make(history, BitVector(4));
  CHECK(oracle::multiply(oracle::dense(parity_matrix(inst)), oracle::dense(pg.generator.matrix)) ==
        oracle::Dense(4, std::vector<int>(history.size() - 4)));

  CHECK_THROWS_AS(parity_graph({BitVector::from_string("10"), BitVector::from_string("01"),
                                BitVector::from_string("10")}),
                  Error);
}

TEST_CASE("basis transforms") {
  std::mt19937_64 rng(18);
  for (std::size_t n : {3u, 9u, 70u}) {
    const BitMatrix p = oracle::random_invertible(n, rng);
    const BasisTransform t(p);
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng() & 1) v.set(i);
    BitVector out(n);
    t.apply(v.words(), out.words());
    CHECK(out == mat_vec(p, v));
  }
}
