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

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/bit_vector.hpp"
#include "cnotsyn/errors.hpp"
#include "cnotsyn/rng.hpp"
#include "oracles.hpp"

using namespace cnotsyn;

TEST_CASE("bit vector basics") {
  BitVector v = BitVector::from_string("10110");
  CHECK(v.size() == 5);
  CHECK(v.count() == 3);
  CHECK(v.ones() == std::vector<std::size_t>{0, 2, 3});
  CHECK(v.find_next(1) == 2);
  CHECK(v.prefix(2) == BitVector::from_string("10"));
  CHECK(v.resized(7).to_string() == "1011000");
  CHECK((v ^ BitVector::from_string("10010")) == BitVector::from_string("00100"));
  CHECK(v.dot(BitVector::from_string("11100")) == false);
  BitVector wide(130);
  wide.set(129);
  CHECK(wide.find_first() == 129);
  CHECK(BitVector(130).find_first() == 130);
}

TEST_CASE("mat_mul") {
  const BitMatrix cnot = BitMatrix::from_strings({"10", "11"});
  CHECK(cnot * cnot == BitMatrix::identity(2));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 70;
    BitMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() & 1) a.set(i, j);
        if (rng() & 1) b.set(i, j);
      }
    CHECK(a * b == oracle::packed(oracle::multiply(oracle::dense(a), oracle::dense(b))));
    CHECK(BitMatrix::identity(n) * a == a);
  }
  CHECK_THROWS_AS(BitMatrix(2, 3) * BitMatrix(2, 3), ContractViolation);
}

TEST_CASE("rank and inverse") {
  CHECK(rank(BitMatrix(4, 4)) == 0);
  CHECK(rank(BitMatrix::identity(5)) == 5);
  CHECK(rank(BitMatrix::from_strings({"11", "11"})) == 1);
  const BitMatrix cnot = BitMatrix::from_strings({"10", "11"});
  CHECK(inverse(cnot) == cnot);
  CHECK(inverse(BitMatrix::identity(3)) == BitMatrix::identity(3));
  CHECK_THROWS_AS(inverse(BitMatrix::from_strings({"11", "11"})), SingularMatrix);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 40;
    BitMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() & 1) a.set(i, j);
    CHECK(rank(a) == oracle::rank(oracle::dense(a)));
  }
  const BitMatrix a = oracle::random_invertible(16, rng);
  CHECK(a * inverse(a) == BitMatrix::identity(16));
}

TEST_CASE("plu decomposition") {
  const auto id = plu_decompose(BitMatrix::identity(4));
  CHECK(id.perm == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(id.lower.is_identity());
  CHECK(id.upper.is_identity());
  const auto swap = plu_decompose(BitMatrix::from_strings({"01", "10"}));
  CHECK(swap.perm == std::vector<std::size_t>{1, 0});
  CHECK(swap.lower.is_identity());
  CHECK(swap.upper.is_identity());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 40;
    const BitMatrix a = oracle::random_invertible(n, rng);
    const auto f = plu_decompose(a);
    CHECK(f.lower.is_unit_lower_triangular());
    CHECK(f.upper.is_unit_upper_triangular());
    CHECK(is_permutation(f.perm));
    CHECK(oracle::multiply(oracle::multiply(oracle::dense(permutation_matrix(f.perm)),
                                            oracle::dense(f.lower)),
                           oracle::dense(f.upper)) == oracle::dense(a));
  }
  CHECK_THROWS_AS(plu_decompose(BitMatrix::from_strings({"11", "11"})), SingularMatrix);
}

TEST_CASE("permutation matrix convention") {
  const std::vector<std::size_t> perm{2, 0, 1};
  const BitMatrix x = BitMatrix::from_strings({"100", "110", "011"});
  const BitMatrix px = permutation_matrix(perm) * x;
  for (std::size_t i = 0; i < 3; ++i) CHECK(px.row(i) == x.row(perm[i]));
  CHECK(invert_permutation(perm) == std::vector<std::size_t>{1, 2, 0});
  CHECK_FALSE(is_permutation(std::vector<std::size_t>{0, 0, 1}));
}

TEST_CASE("leading minors") {
  for (std::size_t k = 1; k <= 4; ++k)
    CHECK(leading_minor_invertible(BitMatrix::identity(4), k));
  CHECK_THROWS_AS(leading_minor_invertible(BitMatrix::identity(4), 0), ContractViolation);
  CHECK_FALSE(leading_minor_invertible(BitMatrix::from_strings({"01", "10"}), 1));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 12;
    const BitMatrix a = oracle::random_invertible(n, rng);
    const auto d = oracle::dense(a);
    for (std::size_t k = 1; k <= n; ++k) {
      oracle::Dense block(k, std::vector<int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block[i][j] = d[i][j];
      CHECK(leading_minor_invertible(a, k) == (oracle::rank(block) == k));
    }
  }
}

TEST_CASE("conjugation by an order") {
  const BitMatrix a = BitMatrix::from_strings({"100", "110", "011"});
  const std::vector<std::size_t> order{2, 0, 1};
  const BitMatrix c = conjugate_by_order(a, order);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(c.get(i, j) == a.get(order[i], order[j]));
}

TEST_CASE("seed derivation") {
  CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
  CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
  CHECK(derive_seed(1, {2}) != derive_seed(2, {2}));
  Rng a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(a.below(17) == b.below(17));
  Rng c(6);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(3) < 3);
}
