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

#include <cmath>

#include "cnotsyn/architectures.hpp"
#include "cnotsyn/errors.hpp"
#include "cnotsyn/topology.hpp"
#include "oracles.hpp"

using namespace cnotsyn;

namespace {

// Lattice pairs at Euclidean distance <= radius, counted directly.
std::size_t lattice_pairs(std::size_t rows, std::size_t cols, double radius) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < rows * cols; ++a)
    for (std::size_t b = a + 1; b < rows * cols; ++b) {
      const double dr = static_cast<double>(a / cols) - static_cast<double>(b / cols);
      const double dc = static_cast<double>(a % cols) - static_cast<double>(b % cols);
      if (dr * dr + dc * dc <= radius * radius + 1e-9) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("standard graphs") {
  const ConnectivityGraph l = line(3);
  CHECK(l.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(l.distance(0, 2) == 2);
  CHECK(grid(3, 3).edges().size() == 12);
  CHECK(grid(4, 5).edges().size() == 2 * 4 * 5 - 4 - 5);
  CHECK(grid_with_diagonals(3, 3).edges().size() == 12 + 8);
  CHECK(complete(6).edges().size() == 15);
  CHECK(complete(6).is_complete());
  CHECK(grid(3, 4).grid()->rows == 3);
  CHECK(grid(3, 4).coords(5)->y == 1.0);
  CHECK(grid(3, 4).coords(5)->x == 1.0);
}

TEST_CASE("radius lattices") {
  CHECK(radius_grid(4, 4, 1.0).edges() == grid(4, 4).edges());
  CHECK(radius_grid(4, 4, std::sqrt(2.0)).edges() == grid_with_diagonals(4, 4).edges());
  CHECK(radius_grid(5, 5, std::sqrt(32.0)).is_complete());
  for (double r : {1.0, std::sqrt(2.0), 2.0, std::sqrt(5.0), 3.0})
    CHECK(radius_grid(5, 5, r).edges().size() == lattice_pairs(5, 5, r));
}

TEST_CASE("random augmentation") {
  const ConnectivityGraph l = line(20);
  CHECK(augment_random(l, 0, 1).edges() == l.edges());
  CHECK(augment_random(l, 30, 7).edges() == augment_random(l, 30, 7).edges());
  CHECK(augment_random(l, 30, 7).edges().size() == 19 + 30);
  CHECK(augment_random(l, 171, 3).is_complete());
  CHECK_THROWS_AS(augment_random(l, 172, 3), ContractViolation);
}

TEST_CASE("distances") {
  const ConnectivityGraph g = grid(4, 5);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      const long dr = std::labs(static_cast<long>(u / 5) - static_cast<long>(v / 5));
      const long dc = std::labs(static_cast<long>(u % 5) - static_cast<long>(v % 5));
      CHECK(g.distance(u, v) == dr + dc);
    }
}

TEST_CASE("shortest paths") {
  CHECK(all_shortest_paths(line(6), 0, 5).size() == 1);
  CHECK(all_shortest_paths(line(6), 0, 5, 1).size() == 1);
  CHECK(all_shortest_paths(grid(2, 2), 0, 3).size() == 2);
  CHECK(all_shortest_paths(grid(3, 3), 0, 8).size() == 6);
  CHECK(all_shortest_paths(grid(3, 3), 0, 8, 4).size() == 4);
  const ConnectivityGraph g = grid_with_diagonals(3, 4);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (u == v) continue;
      const auto paths = all_shortest_paths(g, u, v);
      CHECK(paths.size() == oracle::count_shortest_paths(g, u, v));
      for (const auto& p : paths) {
        CHECK(p.front() == u);
        CHECK(p.back() == v);
        CHECK(p.size() == g.distance(u, v) + 1);
        for (std::size_t i = 1; i < p.size(); ++i) CHECK(g.adjacent(p[i - 1], p[i]));
      }
    }
  // Restricted to a subset, the detour becomes the only path.
  std::vector<bool> allowed(9, true);
  allowed[1] = allowed[4] = false;
  const auto detour = all_shortest_paths(grid(3, 3), 0, 2, kUnbounded, &allowed);
  REQUIRE(detour.size() == 1);
  CHECK(detour[0].size() == 7);
}

TEST_CASE("edge lists") {
  CHECK(load_edge_list("3\n0 1\n1 2").edges() == line(3).edges());
  CHECK(load_edge_list(to_edge_list(grid(3, 3))).edges() == grid(3, 3).edges());
  CHECK_THROWS_AS(load_edge_list("3\n"), Error);
  CHECK_THROWS_AS(load_edge_list("3\n0 3\n1 2\n"), Error);
  CHECK_THROWS_AS(load_edge_list("4\n0 1\n2 3\n"), Error);
}

TEST_CASE("presets") {
  const Architecture tokyo = make_architecture("ibm_q20_tokyo");
  CHECK(tokyo.graph.size() == 20);
  std::vector<bool> all(20, true);
  CHECK(induces_connected(tokyo.graph, all));
  CHECK(make_architecture("ibm_qx5").graph.size() == 16);
  CHECK(make_architecture("rigetti_16q_aspen").graph.size() == 16);
  CHECK(make_architecture("grid:3x4").graph.size() == 12);
  CHECK(make_architecture("radius:5x5:sqrt(2)").graph.edges() ==
        grid_with_diagonals(5, 5).edges());
  CHECK(make_architecture("all:7").all_to_all);
  CHECK_THROWS_AS(make_architecture("hexagon:3"), ParseError);
  CHECK_THROWS_AS(make_architecture("grid:3y3"), ParseError);
}
