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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cnotsyn {

using Node = std::size_t;
using Edge = std::pair<Node, Node>;
using Path = std::vector<Node>;

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();
inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

struct GridShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool operator==(const GridShape&) const = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Undirected, connected coupling graph with all-pairs hop distances.
///
/// Grid-derived graphs also carry their lattice shape and coordinates;
/// node r * cols + c sits at row r, column c.
class ConnectivityGraph {
 public:
  ConnectivityGraph() = default;
  /// Throws ContractViolation on self loops or out-of-range endpoints and
  /// Error when the graph is disconnected.
  ConnectivityGraph(std::size_t n_nodes, std::vector<Edge> edges,
                    std::optional<GridShape> grid = std::nullopt);

  std::size_t size() const { return n_; }
  /// Edges normalized to (min, max) and sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Node> neighbors(Node u) const { return adjacency_[u]; }
  bool adjacent(Node u, Node v) const { return distance(u, v) == 1; }
  std::uint32_t distance(Node u, Node v) const { return dist_[u * n_ + v]; }

  const std::optional<GridShape>& grid() const { return grid_; }
  std::optional<Point> coords(Node u) const;

  bool is_complete() const { return edges_.size() == n_ * (n_ - 1) / 2; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;
  std::vector<std::uint32_t> dist_;
  std::optional<GridShape> grid_;
};

ConnectivityGraph line(std::size_t n);
ConnectivityGraph complete(std::size_t n);
ConnectivityGraph grid(std::size_t rows, std::size_t cols);
ConnectivityGraph grid_with_diagonals(std::size_t rows, std::size_t cols);
/// Lattice nodes joined whenever their Euclidean distance is <= radius.
ConnectivityGraph radius_grid(std::size_t rows, std::size_t cols, double radius);
/// Adds `extra_edges` absent pairs drawn uniformly at random.
ConnectivityGraph augment_random(const ConnectivityGraph& g,
                                 std::size_t extra_edges, std::uint64_t seed);

/// Edge-list text: first line "n", then one "u v" pair per line.
ConnectivityGraph load_edge_list(std::string_view text);
std::string to_edge_list(const ConnectivityGraph& g);

/// Hop distances from `source` inside the subgraph of nodes with
/// allowed[u] true. Unreachable nodes get kUnreachable.
std::vector<std::uint32_t> distances_within(const ConnectivityGraph& g,
                                            Node source,
                                            const std::vector<bool>& allowed);

/// All shortest u-v paths, in lexicographic order of node indices, truncated
/// to the first `cap` paths. When `allowed` is given, paths stay inside that
/// node subset and "shortest" refers to distances within it.
std::vector<Path> all_shortest_paths(const ConnectivityGraph& g, Node u,
                                     Node v, std::size_t cap = kUnbounded,
                                     const std::vector<bool>* allowed = nullptr);

/// True when the nodes marked in `nodes` induce a connected subgraph.
bool induces_connected(const ConnectivityGraph& g,
                       const std::vector<bool>& nodes);

}  // namespace cnotsyn
