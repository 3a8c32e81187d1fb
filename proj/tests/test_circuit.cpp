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
#include "cnotsyn/errors.hpp"
#include "cnotsyn/text_io.hpp"
#include "cnotsyn/topology.hpp"
#include "oracles.hpp"

using namespace cnotsyn;

TEST_CASE("simulate") {
  CHECK(simulate(CnotCircuit(3)) == BitMatrix::identity(3));
  CnotCircuit one(2);
  one.add(0, 1);
  CHECK(simulate(one) == BitMatrix::from_strings({"10", "11"}));
  CnotCircuit two(2);
  two.add(0, 1);
  two.add(1, 0);
  // row1 ^= row0 gives (10, 11); row0 ^= row1 gives (01, 11).
  CHECK(simulate(two) == BitMatrix::from_strings({"01", "11"}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CnotCircuit c = random_circuit(2 + seed % 9, 60, seed);
    CHECK(oracle::dense(simulate(c)) == oracle::simulate(c));
  }
}

TEST_CASE("gate composition order") {
  const CnotCircuit x = random_circuit(6, 15, 1);
  const CnotCircuit y = random_circuit(6, 15, 2);
  CHECK(simulate(concat(x, y)) == simulate(y) * simulate(x));
}

TEST_CASE("inverse and transpose") {
  CHECK(inverse_circuit(CnotCircuit(2)).empty());
  CnotCircuit one(2);
  one.add(0, 1);
  CHECK(inverse_circuit(one) == one);
  CnotCircuit flipped(2);
  flipped.add(1, 0);
  CHECK(transpose_circuit(one) == flipped);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CnotCircuit c = random_circuit(7, 50, seed);
    CHECK(simulate(concat(c, inverse_circuit(c))).is_identity());
    CHECK(simulate(transpose_circuit(c)) == simulate(c).transposed());
  }
}

TEST_CASE("insert and relabel") {
  CnotCircuit c(3);
  c.add(0, 1);
  c.add(1, 2);
  c.insert(1, {0, 2});
  CHECK(c[1] == CnotGate{0, 2});
  CHECK(c.size() == 3);
  CHECK_THROWS_AS(c.add(1, 1), ContractViolation);
  CHECK_THROWS_AS(c.add(0, 3), ContractViolation);
  // Wire r of the input becomes wire order[r].
  const std::vector<std::size_t> order{2, 0, 1};
  const CnotCircuit r = relabel_wires(c, order);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(r[i].control == order[c[i].control]);
    CHECK(r[i].target == order[c[i].target]);
  }
}

TEST_CASE("compliance") {
  const ConnectivityGraph g = line(3);
  CHECK(complies_with(CnotCircuit(3), g));
  CnotCircuit far(3);
  far.add(0, 2);
  CHECK_FALSE(complies_with(far, g));
  CnotCircuit near(3);
  near.add(0, 1);
  near.add(2, 1);
  CHECK(complies_with(near, g));
}

TEST_CASE("random operators") {
  CHECK(random_operator(5, 0, 9).is_identity());
  CHECK(random_operator(8, 100, 3) == random_operator(8, 100, 3));
  CHECK(random_operator(8, 100, 3) != random_operator(8, 100, 4));
  double weight = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BitMatrix a = random_operator(60, 3600, seed);
    CHECK(rank(a) == 60);
    for (std::size_t r = 0; r < 60; ++r) weight += static_cast<double>(a.row(r).count());
  }
  weight /= 600.0;
  CHECK(weight > 27.0);
  CHECK(weight < 33.0);
}

TEST_CASE("text formats") {
  const BitMatrix a = BitMatrix::from_strings({"101", "011", "001"});
  CHECK(format_matrix(a) == "3 3\n101\n011\n001\n");
  CHECK(parse_matrix(format_matrix(a)) == a);
  CHECK_THROWS_AS(parse_matrix("3 3\n101\n01\n001\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("x\n"), ParseError);
  const CnotCircuit c = random_circuit(5, 12, 4);
  CHECK(parse_circuit(format_circuit(c)) == c);
  CHECK(parse_circuit("2\nCNOT 0 1\n").size() == 1);
  CHECK_THROWS_AS(parse_circuit("2\nCNOT 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("2\nSWAP 0 1\n"), ParseError);
  CHECK(parse_indices("2 0 1\n") == std::vector<std::size_t>{2, 0, 1});
  CHECK(format_indices({2, 0, 1}) == "2 0 1\n");
}
