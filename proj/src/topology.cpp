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

#include "cnotsyn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "cnotsyn/errors.hpp"
#include "cnotsyn/rng.hpp"

namespace cnotsyn {

namespace {

template <typename Neighbors>
std::vector<std::uint32_t> bfs(std::size_t n, Neighbors&& neighbors,
                               Node source, const std::vector<bool>* allowed) {
  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::deque<Node> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    for (Node w : neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      if (allowed != nullptr && !(*allowed)[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

ConnectivityGraph::ConnectivityGraph(std::size_t n_nodes,
                                     std::vector<Edge> edges,
                                     std::optional<GridShape> grid)
    : n_(n_nodes), adjacency_(n_nodes), grid_(grid) {
  if (n_nodes == 0) throw ContractViolation("graph must have at least one node");
  if (grid_ && grid_->rows * grid_->cols != n_nodes)
    throw ContractViolation("grid shape does not match node count");
  for (auto& [u, v] : edges) {
    if (u >= n_ || v >= n_) throw ContractViolation("edge endpoint out of range");
    if (u == v) throw ContractViolation("self loop in edge list");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  dist_.resize(n_ * n_);
  for (Node u = 0; u < n_; ++u) {
    const auto d = bfs(
        n_, [this](Node x) -> const std::vector<Node>& { return adjacency_[x]; },
        u, nullptr);
    for (Node v = 0; v < n_; ++v) {
      if (d[v] == kUnreachable) throw Error("connectivity graph is disconnected");
      dist_[u * n_ + v] = d[v];
    }
  }
}

std::optional<Point> ConnectivityGraph::coords(Node u) const {
  if (!grid_) return std::nullopt;
  return Point{static_cast<double>(u % grid_->cols),
               static_cast<double>(u / grid_->cols)};
}

ConnectivityGraph line(std::size_t n) {
  if (n < 2) throw ContractViolation("line: need at least two nodes");
  std::vector<Edge> edges;
  for (Node i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return {n, std::move(edges), GridShape{1, n}};
}

ConnectivityGraph complete(std::size_t n) {
  if (n < 2) throw ContractViolation("complete: need at least two nodes");
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i)
    for (Node j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return {n, std::move(edges)};
}

ConnectivityGraph radius_grid(std::size_t rows, std::size_t cols,
                              double radius) {
  if (rows * cols < 2) throw ContractViolation("grid: need at least two nodes");
  if (radius < 1.0) throw ContractViolation("radius_grid: radius must be >= 1");
  // Squared lattice distances are integers; the slack absorbs sqrt rounding.
  const double limit = radius * radius + 1e-9;
  std::vector<Edge> edges;
  const std::size_t n = rows * cols;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      const double dr = static_cast<double>(u / cols) - static_cast<double>(v / cols);
      const double dc = static_cast<double>(u % cols) - static_cast<double>(v % cols);
      if (dr * dr + dc * dc <= limit) edges.emplace_back(u, v);
    }
  }
  return {n, std::move(edges), GridShape{rows, cols}};
}

ConnectivityGraph grid(std::size_t rows, std::size_t cols) {
  return radius_grid(rows, cols, 1.0);
}

ConnectivityGraph grid_with_diagonals(std::size_t rows, std::size_t cols) {
  return radius_grid(rows, cols, std::sqrt(2.0));
}

ConnectivityGraph augment_random(const ConnectivityGraph& g,
                                 std::size_t extra_edges, std::uint64_t seed) {
  std::vector<Edge> absent;
  for (Node u = 0; u < g.size(); ++u)
    for (Node v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) absent.emplace_back(u, v);
  if (extra_edges > absent.size())
    throw ContractViolation("augment_random: not enough absent pairs");
  if (extra_edges == 0) return g;
  Rng rng(seed);
  // Partial Fisher-Yates: the first extra_edges slots form the sample.
  for (std::size_t i = 0; i < extra_edges; ++i)
    std::swap(absent[i], absent[i + rng.below(absent.size() - i)]);
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), absent.begin(),
               absent.begin() + static_cast<std::ptrdiff_t>(extra_edges));
  return {g.size(), std::move(edges)};
}

ConnectivityGraph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line_text;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line_text)) {
    ++line_no;
    const auto first = line_text.find_first_not_of(" \t\r");
    if (first == std::string::npos || line_text[first] == '#') continue;
    std::istringstream fields(line_text);
    if (!have_header) {
      if (!(fields >> n) || n == 0)
        throw ParseError("edge list: expected node count on line " +
                         std::to_string(line_no));
      have_header = true;
      continue;
    }
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0)
      throw ParseError("edge list: malformed edge on line " +
                       std::to_string(line_no));
    if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ParseError("edge list: node index out of range on line " +
                       std::to_string(line_no));
    if (u == v)
      throw ParseError("edge list: self loop on line " + std::to_string(line_no));
    edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
  }
  if (!have_header) throw ParseError("edge list: empty input");
  if (edges.empty() && n > 1) throw ParseError("edge list: no edges");
  return {n, std::move(edges)};
}

std::string to_edge_list(const ConnectivityGraph& g) {
  std::ostringstream os;
  os << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<std::uint32_t> distances_within(const ConnectivityGraph& g,
                                            Node source,
                                            const std::vector<bool>& allowed) {
  return bfs(
      g.size(), [&g](Node x) { return g.neighbors(x); }, source, &allowed);
}

std::vector<Path> all_shortest_paths(const ConnectivityGraph& g, Node u,
                                     Node v, std::size_t cap,
                                     const std::vector<bool>* allowed) {
  if (u == v) throw ContractViolation("all_shortest_paths: endpoints coincide");
  std::vector<Path> out;
  if (cap == 0) return out;

  // Distances towards v; a step from w is on a shortest path iff it lowers
  // the distance by one.
  std::vector<std::uint32_t> to_v;
  if (allowed == nullptr) {
    to_v.resize(g.size());
    for (Node w = 0; w < g.size(); ++w) to_v[w] = g.distance(w, v);
  } else {
    if (!(*allowed)[u] || !(*allowed)[v]) return out;
    to_v = distances_within(g, v, *allowed);
  }
  if (to_v[u] == kUnreachable) return out;

  Path path{u};
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    const Node cur = path.back();
    if (cur == v) {
      out.push_back(path);
      if (out.size() == cap) break;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const auto nb = g.neighbors(cur);
    std::size_t& i = cursor.back();
    while (i < nb.size() && to_v[nb[i]] + 1 != to_v[cur]) ++i;
    if (i == nb.size()) {
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    path.push_back(nb[i]);
    ++i;
    cursor.push_back(0);
  }
  return out;
}

bool induces_connected(const ConnectivityGraph& g,
                       const std::vector<bool>& nodes) {
  Node start = g.size();
  std::size_t count = 0;
  for (Node u = 0; u < g.size(); ++u) {
    if (nodes[u]) {
      if (start == g.size()) start = u;
      ++count;
    }
  }
  if (count <= 1) return true;
  const auto d = distances_within(g, start, nodes);
  for (Node u = 0; u < g.size(); ++u)
    if (nodes[u] && d[u] == kUnreachable) return false;
  return true;
}

}  // namespace cnotsyn
