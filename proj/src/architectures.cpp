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

#include "cnotsyn/architectures.hpp"

#include <cmath>
#include <cstdlib>

#include "cnotsyn/errors.hpp"
#include "cnotsyn/text_io.hpp"

namespace cnotsyn {

namespace {

std::size_t parse_size(const std::string& s, const std::string& spec) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size())
    throw ParseError("architecture '" + spec + "': bad number '" + s + "'");
  return v;
}

std::pair<std::size_t, std::size_t> parse_shape(const std::string& s,
                                                const std::string& spec) {
  const auto x = s.find('x');
  if (x == std::string::npos)
    throw ParseError("architecture '" + spec + "': expected RxC");
  return {parse_size(s.substr(0, x), spec), parse_size(s.substr(x + 1), spec)};
}

double parse_radius(const std::string& s, const std::string& spec) {
  try {
    if (s.rfind("sqrt(", 0) == 0 && s.back() == ')')
      return std::sqrt(std::stod(s.substr(5, s.size() - 6)));
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("architecture '" + spec + "': bad radius '" + s + "'");
}

Architecture from_files(const std::string& name, const std::filesystem::path& edges,
                        const std::filesystem::path& order) {
  Architecture arch{name, load_edge_list(read_file(edges)), false, {}};
  if (std::filesystem::exists(order)) {
    arch.ordering = QubitOrdering::from_ranks(parse_indices(read_file(order)));
    if (arch.ordering.size() != arch.graph.size())
      throw ParseError("ordering file " + order.string() + " has the wrong length");
  } else {
    arch.ordering = QubitOrdering::identity(arch.graph.size());
  }
  return arch;
}

}  // namespace

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("CNOTSYN_DATA_DIR")) return env;
  return CNOTSYN_DATA_DIR;
}

Architecture make_architecture(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto lattice = [&](ConnectivityGraph g) {
    QubitOrdering o = snake(g);
    return Architecture{spec, std::move(g), false, std::move(o)};
  };
  if (kind == "all") {
    const auto n = parse_size(rest, spec);
    return {spec, complete(n), true, QubitOrdering::identity(n)};
  }
  if (kind == "line") return lattice(line(parse_size(rest, spec)));
  if (kind == "grid") {
    const auto [r, c] = parse_shape(rest, spec);
    return lattice(grid(r, c));
  }
  if (kind == "grid_diag") {
    const auto [r, c] = parse_shape(rest, spec);
    return lattice(grid_with_diagonals(r, c));
  }
  if (kind == "radius") {
    const auto second = rest.find(':');
    if (second == std::string::npos)
      throw ParseError("architecture '" + spec + "': expected radius:RxC:D");
    const auto [r, c] = parse_shape(rest.substr(0, second), spec);
    return lattice(radius_grid(r, c, parse_radius(rest.substr(second + 1), spec)));
  }
  if (kind == "file") {
    const std::filesystem::path p = rest;
    return from_files(spec, p, std::filesystem::path(rest + ".order"));
  }
  if (colon == std::string::npos) {
    const auto dir = data_directory() / "architectures";
    const auto edges = dir / (spec + ".edges");
    if (std::filesystem::exists(edges))
      return from_files(spec, edges, dir / (spec + ".order"));
  }
  throw ParseError("unknown architecture '" + spec + "'");
}

ConstrainedConfig tuned_config(const Architecture& arch) {
  ConstrainedConfig cfg;
  cfg.ordering = arch.ordering;
  const std::size_t n = arch.graph.size();
  const auto& shape = arch.graph.grid();
  const bool lattice = shape && shape->rows > 1 && shape->cols > 1;
  // Lattices with diagonals have 2rc - r - c + 2(r-1)(c-1) edges.
  const bool diagonal =
      lattice && arch.graph.edges().size() ==
                     2 * n - shape->rows - shape->cols +
                         2 * (shape->rows - 1) * (shape->cols - 1);
  cfg.niter = 100;
  cfg.use_symmetries = lattice;
  if (n <= 25) return cfg;
  if (n <= 36) {
    cfg.sp_max = diagonal ? 10 : 1;
    if (diagonal) cfg.niter = 50;
    return cfg;
  }
  if (n <= 49) {
    if (diagonal) {
      cfg.niter = 10;
      cfg.sp_max = 10;
    } else {
      cfg.sp_max = 1;
      cfg.solver = ConstrainedConfig::Solver::kFast;
    }
    return cfg;
  }
  cfg.sp_max = 1;
  cfg.solver = ConstrainedConfig::Solver::kFast;
  cfg.niter = n <= 64 ? 50 : 25;
  return cfg;
}

}  // namespace cnotsyn
