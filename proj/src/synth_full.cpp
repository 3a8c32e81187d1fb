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

#include "cnotsyn/synth_full.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "cnotsyn/errors.hpp"
#include "cnotsyn/rng.hpp"

namespace cnotsyn {

namespace {

std::size_t parse_positive(const std::string& s, const std::string& what) {
  if (s == "inf" || s == "Inf") return kUnbounded;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("solver: bad " + what + " '" + s + "'");
  }
  if (pos != s.size() || v == 0)
    throw ParseError("solver: bad " + what + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

std::string count_text(std::size_t v) {
  return v == kUnbounded ? "inf" : std::to_string(v);
}

}  // namespace

SolverSpec SolverSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  const auto& name = parts[0];
  if (name == "greedy" && parts.size() == 1) return greedy();
  if (name == "tree" && parts.size() == 3) {
    const auto depth = parse_positive(parts[2], "depth");
    if (depth == kUnbounded) throw ParseError("solver: depth must be finite");
    return tree(parse_positive(parts[1], "width"), depth);
  }
  if (name == "isd" && parts.size() == 2) {
    const auto n = parse_positive(parts[1], "iteration count");
    if (n == kUnbounded) throw ParseError("solver: iteration count must be finite");
    return isd(n);
  }
  if (name == "exact" && parts.size() <= 2)
    return parts.size() == 1 ? exact() : exact(parse_positive(parts[1], "budget"));
  throw ParseError("unknown solver '" + text + "'");
}

std::string SolverSpec::to_string() const {
  switch (kind) {
    case Kind::kGreedy:
      return "greedy";
    case Kind::kTree:
      return "tree:" + count_text(width) + ":" + std::to_string(depth);
    case Kind::kIsd:
      return "isd:" + std::to_string(n_iter);
    case Kind::kExact:
      return "exact:" + std::to_string(budget);
  }
  return "?";
}

namespace {

SyndromeSolution decode_once(const SyndromeInstance& inst,
                             const SynthesisConfig& cfg, std::uint64_t seed) {
  const auto& s = cfg.solver;
  switch (s.kind) {
    case SolverSpec::Kind::kGreedy:
      return solve_greedy(inst);
    case SolverSpec::Kind::kTree:
      return solve_tree(inst, s.width, s.depth);
    case SolverSpec::Kind::kIsd:
      return solve_isd(inst, s.n_iter, seed, cfg.deadline);
    case SolverSpec::Kind::kExact: {
      ExactOptions opt;
      opt.node_budget = s.budget;
      opt.warm_start = solve_greedy(inst);
      try {
        return solve_exact(inst, opt);
      } catch (const BudgetExhausted& e) {
        return *e.incumbent;
      }
    }
  }
  throw ContractViolation("unknown solver kind");
}

}  // namespace

SyndromeSolution decode(const SyndromeInstance& inst, const SynthesisConfig& cfg,
                        std::uint64_t stream) {
  const std::uint64_t seed = derive_seed(cfg.seed, {stream});
  if (cfg.niter_syndrome <= 1) return decode_once(inst, cfg, seed);
  return solve_in_random_bases(
      inst, cfg.niter_syndrome, derive_seed(seed, {1}), cfg.deadline,
      [&](const SyndromeInstance& x) { return decode_once(x, cfg, seed); });
}

std::vector<ParityEntry> harvest_parities(const CnotCircuit& c, std::size_t k,
                                          bool dedup) {
  if (k > c.n_wires()) throw ContractViolation("harvest_parities: k out of range");
  std::vector<ParityEntry> out;
  std::unordered_map<BitVector, std::size_t, BitVectorHash> seen;
  auto record = [&](BitVector v, std::size_t q, std::size_t pos) {
    if (dedup && !seen.emplace(v, out.size()).second) return;
    out.push_back({std::move(v), q, pos});
  };
  std::vector<BitVector> rows;
  for (std::size_t q = 0; q < k; ++q) {
    rows.push_back(BitVector::unit(k, q));
    record(rows.back(), q, 0);
  }
  for (std::size_t p = 0; p < c.size(); ++p) {
    const auto& g = c[p];
    if (g.target >= k) continue;
    if (g.control >= k)
      throw ContractViolation("harvest_parities: gate reads a qubit beyond k");
    rows[g.target] ^= rows[g.control];
    record(rows[g.target], g.target, p + 1);
  }
  return out;
}

namespace {

/// Lower triangular synthesis; `stream_base` keeps the L and U phases of a
/// general synthesis on different seed streams.
CnotCircuit synth_lower(const BitMatrix& l, const SynthesisConfig& cfg,
                        std::uint64_t stream_base) {
  if (!l.is_unit_lower_triangular())
    throw ContractViolation("synth_lower_triangular: input is not unit lower triangular");
  const std::size_t n = l.rows();
  CnotCircuit c(n);
  for (std::size_t k = 1; k < n; ++k) {
    const BitVector target = l.row(k).prefix(k);
    if (target.none()) continue;
    const auto history = harvest_parities(c, k);
    std::vector<BitVector> cols;
    cols.reserve(history.size());
    for (const auto& e : history) cols.push_back(e.parity);
    const auto inst = SyndromeInstance::make(cols, target);
    const auto sol = decode(inst, cfg, stream_base + k);

    // Chronological insertion; every insert shifts later positions by one.
    std::vector<std::pair<std::size_t, std::size_t>> inserts;
    for (std::size_t j : sol.support)
      inserts.emplace_back(history[j].position, history[j].qubit);
    std::sort(inserts.begin(), inserts.end());
    std::size_t offset = 0;
    for (const auto& [pos, q] : inserts) c.insert(pos + offset++, {q, k});
  }
  return c;
}

}  // namespace

CnotCircuit synth_lower_triangular(const BitMatrix& l, const SynthesisConfig& cfg) {
  return synth_lower(l, cfg, 0);
}

SynthesisResult synth_general(const BitMatrix& a, const SynthesisConfig& cfg) {
  const auto f = plu_decompose(a);
  const std::size_t n = a.rows();
  const CnotCircuit upper =
      transpose_circuit(synth_lower(f.upper.transposed(), cfg, 2 * n));
  const CnotCircuit lower = synth_lower(f.lower, cfg, 0);
  return {concat(upper, lower), f.perm};
}

BitMatrix realized_operator(const SynthesisResult& r) {
  return permutation_matrix(r.output_wire) * simulate(r.circuit);
}

CnotCircuit gaussian_elimination(const BitMatrix& a) {
  if (!a.is_square()) throw ContractViolation("gaussian_elimination: matrix not square");
  const std::size_t n = a.rows();
  BitMatrix m = a;
  std::vector<CnotGate> ops;
  for (std::size_t c = 0; c < n; ++c) {
    if (!m.get(c, c)) {
      std::size_t r = c + 1;
      while (r < n && !m.get(r, c)) ++r;
      if (r == n) throw SingularMatrix();
      m.add_row(c, r);
      ops.push_back({r, c});
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || !m.get(r, c)) continue;
      m.add_row(r, c);
      ops.push_back({c, r});
    }
  }
  std::reverse(ops.begin(), ops.end());
  return {n, std::move(ops)};
}

namespace {

// Clears everything below the diagonal of m, recording row operations.
std::vector<CnotGate> lower_elimination(BitMatrix& m, std::size_t section) {
  const std::size_t n = m.rows();
  std::vector<CnotGate> ops;
  for (std::size_t start = 0; start < n; start += section) {
    const std::size_t end = std::min(n, start + section);
    std::unordered_map<std::uint64_t, std::size_t> first_with;
    for (std::size_t row = start; row < n; ++row) {
      std::uint64_t pattern = 0;
      for (std::size_t c = start; c < end; ++c)
        if (m.get(row, c)) pattern |= std::uint64_t{1} << (c - start);
      if (pattern == 0) continue;
      const auto [it, fresh] = first_with.emplace(pattern, row);
      if (fresh) continue;
      m.add_row(row, it->second);
      ops.push_back({it->second, row});
    }
    for (std::size_t col = start; col < end; ++col) {
      bool diag = m.get(col, col);
      for (std::size_t row = col + 1; row < n; ++row) {
        if (!m.get(row, col)) continue;
        if (!diag) {
          m.add_row(col, row);
          ops.push_back({row, col});
          diag = true;
        }
        m.add_row(row, col);
        ops.push_back({col, row});
      }
      if (!diag) throw SingularMatrix();
    }
  }
  return ops;
}

}  // namespace

CnotCircuit pmh(const BitMatrix& a, std::size_t partition_size) {
  if (!a.is_square()) throw ContractViolation("pmh: matrix not square");
  const std::size_t n = a.rows();
  if (partition_size == 0) {
    const double half_log = n > 1 ? std::log2(static_cast<double>(n)) / 2.0 : 0.0;
    partition_size = std::max<std::size_t>(1, static_cast<std::size_t>(half_log));
  }
  if (partition_size > 64) throw ContractViolation("pmh: partition size above 64");
  BitMatrix m = a;
  const auto first = lower_elimination(m, partition_size);
  m = m.transposed();
  const auto second = lower_elimination(m, partition_size);
  if (!m.is_identity()) throw SingularMatrix();

  CnotCircuit out(n);
  for (const auto& g : second) out.add(g.target, g.control);
  for (auto it = first.rbegin(); it != first.rend(); ++it) out.add(*it);
  return out;
}

}  // namespace cnotsyn
