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

#include "cnotsyn/synth_constrained.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "cnotsyn/errors.hpp"
#include "cnotsyn/rng.hpp"

namespace cnotsyn {

namespace {

void check_path(const Path& path, const ConnectivityGraph* g) {
  if (path.size() < 2) throw ContractViolation("path needs at least two nodes");
  std::vector<Node> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ContractViolation("path repeats a node");
  if (g == nullptr) return;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (path[i] >= g->size() || path[i + 1] >= g->size() ||
        !g->adjacent(path[i], path[i + 1]))
      throw ContractViolation("path uses a pair that is not an edge");
}

}  // namespace

Cost fanin_cost(const std::vector<bool>& mask) {
  const std::size_t k = mask.size();
  Cost cost = 2 * k + 1;
  for (std::size_t i = 0; i < k; ++i)
    if (!mask[i]) cost += (i + 1 == k) ? 1 : 2;
  return cost;
}

std::vector<CnotGate> fanin_via_path(const Path& path,
                                     const std::vector<bool>& mask,
                                     const ConnectivityGraph* g) {
  check_path(path, g);
  const std::size_t k = path.size() - 2;
  if (mask.size() != k) throw ContractViolation("fan-in mask length differs from path");
  const Node target = path.back();

  // Skipped intermediates are pre-added to their successor while every row
  // still holds its original value, so the ladder below cancels them.
  std::vector<CnotGate> pre_target;
  std::vector<CnotGate> compute;
  for (std::size_t i = k; i >= 1; --i) {
    if (mask[i - 1]) continue;
    if (i == k)
      pre_target.push_back({path[i], target});
    else
      compute.push_back({path[i], path[i + 1]});
  }
  for (std::size_t i = 1; i <= k; ++i) compute.push_back({path[i - 1], path[i]});

  std::vector<CnotGate> out = pre_target;
  out.insert(out.end(), compute.begin(), compute.end());
  out.push_back({path[k], target});
  out.insert(out.end(), compute.rbegin(), compute.rend());
  return out;
}

std::vector<CnotGate> cnot_via_path(const Path& path, const ConnectivityGraph* g) {
  check_path(path, g);
  return fanin_via_path(path, std::vector<bool>(path.size() - 2, false), g);
}

ConnectivityGraph relabel_graph(const ConnectivityGraph& g, const QubitOrdering& o) {
  if (o.size() != g.size()) throw ContractViolation("ordering size differs from graph");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(o.rank(u), o.rank(v));
  return {g.size(), std::move(edges)};
}

namespace {

/// Masks over k intermediates other than full and empty, cheapest first,
/// at most `limit` of them.
std::vector<std::vector<bool>> partial_masks(std::size_t k, std::size_t limit) {
  std::vector<std::pair<Cost, std::vector<bool>>> found;
  // Enumerate by number of removed intermediates; within a count, removing
  // the last one is cheaper, so collecting two counts' worth is enough.
  for (std::size_t removed = 1; removed < k && found.size() < 2 * limit + k; ++removed) {
    std::vector<bool> pick(k, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(removed), pick.end(), true);
    do {
      std::vector<bool> mask(k);
      for (std::size_t i = 0; i < k; ++i) mask[i] = !pick[i];
      found.emplace_back(fanin_cost(mask), std::move(mask));
    } while (std::next_permutation(pick.begin(), pick.end()) &&
             found.size() < 4 * limit + 4 * k);
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<bool>> out;
  for (std::size_t i = 0; i < found.size() && out.size() < limit; ++i)
    out.push_back(std::move(found[i].second));
  return out;
}

}  // namespace

std::vector<WeightedParity> enumerate_templates(const ConnectivityGraph& gr,
                                                std::size_t k, std::size_t sp_max,
                                                std::size_t lc_max) {
  if (k == 0 || k >= gr.size()) throw ContractViolation("enumerate_templates: bad target");
  if (sp_max == 0 || lc_max == 0)
    throw ContractViolation("enumerate_templates: sp_max and lc_max must be positive");
  std::vector<bool> allowed(gr.size(), false);
  std::fill(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(k + 1), true);

  std::vector<WeightedParity> out;
  auto offer = [&](const Path& path, std::vector<bool> mask) {
    BitVector parity(k);
    parity.set(path.front());
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) parity.set(path[i + 1]);
    const Cost cost = mask.empty() ? 1 : fanin_cost(mask);
    out.push_back({std::move(parity), cost, path, std::move(mask)});
  };
  for (Node source = 0; source < k; ++source) {
    for (const auto& path : all_shortest_paths(gr, source, k, sp_max, &allowed)) {
      const std::size_t inner = path.size() - 2;
      offer(path, std::vector<bool>(inner, true));
      if (inner == 0) continue;
      offer(path, std::vector<bool>(inner, false));
      if (lc_max > 1)
        for (auto& m : partial_masks(inner, lc_max - 1)) offer(path, std::move(m));
    }
  }
  return out;
}

ParityTable enumerate_parities(const ConnectivityGraph& gr, std::size_t k,
                               std::size_t sp_max, std::size_t lc_max) {
  std::vector<WeightedParity> parities;
  std::unordered_map<BitVector, std::size_t, BitVectorHash> index;
  for (auto& t : enumerate_templates(gr, k, sp_max, lc_max)) {
    const auto [it, fresh] = index.emplace(t.parity, parities.size());
    if (fresh)
      parities.push_back(std::move(t));
    else if (t.cost < parities[it->second].cost)
      parities[it->second] = std::move(t);
  }

  ParityTable table{SyndromeInstance{ColumnSet(k), BitVector(k), {}}, {}};
  table.instance.columns.reserve(parities.size());
  for (const auto& p : parities) {
    table.instance.columns.push_back(p.parity);
    table.instance.costs.push_back(p.cost);
  }
  table.parities = std::move(parities);
  return table;
}

std::vector<std::size_t> fast_heuristic_step(const ConnectivityGraph& gr,
                                             std::size_t k, const BitVector& t,
                                             const ParityTable& table) {
  if (t.size() != k) throw ContractViolation("fast heuristic: target length differs");
  std::vector<bool> allowed(gr.size(), false);
  std::fill(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(k + 1), true);
  const auto dist = distances_within(gr, k, allowed);

  BitVector rest = t;
  std::vector<std::size_t> used;
  while (rest.any()) {
    std::uint32_t far = 0;
    for (std::size_t i : rest.ones()) far = std::max(far, dist[i]);
    BitVector layer(k);
    for (std::size_t i : rest.ones())
      if (dist[i] == far) layer.set(i);

    std::size_t best = table.parities.size();
    std::tuple<std::size_t, std::size_t, Cost> best_key{};
    for (std::size_t j = 0; j < table.parities.size(); ++j) {
      const auto& p = table.parities[j];
      const bool full = std::all_of(p.mask.begin(), p.mask.end(), [](bool b) { return b; });
      if (!full || !layer.test(p.path.front())) continue;
      const BitVector next = rest ^ p.parity;
      BitVector still(k);
      for (std::size_t i : layer.ones())
        if (next.test(i)) still.set(i);
      const std::tuple<std::size_t, std::size_t, Cost> key{still.count(), next.count(),
                                                           p.cost};
      if (best == table.parities.size() || key < best_key) {
        best = j;
        best_key = key;
      }
    }
    if (best == table.parities.size())
      throw Infeasible("fast heuristic: no template reaches the farthest layer");
    rest ^= table.parities[best].parity;
    used.push_back(best);
  }
  return used;
}

void ConstrainedConfig::validate() const {
  if (sp_max == 0 || lc_max == 0 || niter == 0 || niter_syndrome == 0)
    throw ContractViolation("constrained config: counts must be positive");
}

ConstrainedConfig::Solver ConstrainedConfig::parse_solver(const std::string& text) {
  if (text == "greedy" || text == "weighted_greedy") return Solver::kWeightedGreedy;
  if (text == "fast") return Solver::kFast;
  if (text == "exact") return Solver::kExact;
  throw ParseError("unknown constrained solver '" + text + "'");
}

std::string ConstrainedConfig::solver_name(Solver s) {
  switch (s) {
    case Solver::kWeightedGreedy:
      return "greedy";
    case Solver::kFast:
      return "fast";
    case Solver::kExact:
      return "exact";
  }
  return "?";
}

ConstrainedConfig::Mode ConstrainedConfig::parse_mode(const std::string& text) {
  if (text == "exact") return Mode::kExact;
  if (text == "perm") return Mode::kUpToPermutation;
  throw ParseError("unknown mode '" + text + "' (expected exact or perm)");
}

std::string ConstrainedConfig::mode_name(Mode m) {
  return m == Mode::kExact ? "exact" : "perm";
}

ConstrainedConfig::Harvest ConstrainedConfig::parse_harvest(const std::string& text) {
  if (text == "history") return Harvest::kHistory;
  if (text == "current") return Harvest::kCurrent;
  throw ParseError("unknown harvest mode '" + text + "' (expected history or current)");
}

std::string ConstrainedConfig::harvest_name(Harvest h) {
  return h == Harvest::kHistory ? "history" : "current";
}

QubitOrdering default_ordering(const ConnectivityGraph& g) {
  if (g.grid() && g.grid()->rows * g.grid()->cols == g.size()) return snake(g);
  return QubitOrdering::identity(g.size());
}

namespace {

/// Lower triangular synthesis in rank space. Parity tables depend only on
/// the graph, so they are built once and shared by all restarts.
class LowerSynthesizer {
 public:
  LowerSynthesizer(const ConnectivityGraph& gr, const ConstrainedConfig& cfg)
      : gr_(gr), cfg_(cfg), tables_(gr.size()), templates_(gr.size()) {}

  CnotCircuit run(const BitMatrix& l, std::uint64_t seed, std::size_t restart) {
    if (cfg_.harvest == ConstrainedConfig::Harvest::kHistory &&
        cfg_.solver != ConstrainedConfig::Solver::kFast)
      return run_history(l, seed, restart);
    const std::size_t n = gr_.size();
    CnotCircuit c(n);
    for (std::size_t k = 1; k < n; ++k) {
      const BitVector t = coordinates(l, k);
      if (t.none()) continue;
      if (!tables_[k])
        tables_[k] = enumerate_parities(gr_, k, cfg_.sp_max, cfg_.lc_max);
      const ParityTable& table = *tables_[k];
      for (std::size_t j : choose(table, t, derive_seed(seed, {k}), restart)) {
        const auto& p = table.parities[j];
        c.append(std::span<const CnotGate>(fanin_via_path(p.path, p.mask)));
      }
    }
    return c;
  }

 private:
  struct Templates {
    std::vector<WeightedParity> list;
    std::vector<std::vector<std::size_t>> touching;  // per qubit below k
  };

  const Templates& templates(std::size_t k) {
    if (!templates_[k]) {
      Templates t;
      t.list = enumerate_templates(gr_, k, cfg_.sp_max, cfg_.lc_max);
      t.touching.resize(k);
      for (std::size_t j = 0; j < t.list.size(); ++j)
        for (std::size_t q : t.list[j].parity.ones()) t.touching[q].push_back(j);
      templates_[k] = std::move(t);
    }
    return *templates_[k];
  }

  // Every template applied at every point of the circuit offers the xor of
  // the rows it reads there. Inserting a template anywhere is harmless to
  // the other rows since it restores them.
  CnotCircuit run_history(const BitMatrix& l, std::uint64_t seed, std::size_t restart) {
    const std::size_t n = gr_.size();
    std::vector<CnotGate> gates;
    for (std::size_t k = 1; k < n; ++k) {
      const BitVector s = l.row(k).prefix(k);
      if (s.none()) continue;
      const Templates& tp = templates(k);

      struct Offer {
        Cost cost;
        std::size_t tmpl;
        std::size_t position;
        std::size_t ties = 1;
      };
      // Restarts pick uniformly among the cheapest occurrences of a parity.
      const std::uint64_t step_seed = derive_seed(seed, {k});
      Rng pick(derive_seed(step_seed, {1}));
      std::vector<BitVector> columns;
      std::vector<Offer> offers;
      std::unordered_map<BitVector, std::size_t, BitVectorHash> index;
      std::vector<BitVector> rows;
      for (std::size_t q = 0; q < k; ++q) rows.push_back(BitVector::unit(k, q));
      auto evaluate = [&](std::size_t j, std::size_t position) {
        const auto& t = tp.list[j];
        BitVector v(k);
        for (std::size_t q : t.parity.ones()) v ^= rows[q];
        const auto [it, fresh] = index.emplace(v, offers.size());
        if (fresh) {
          columns.push_back(std::move(v));
          offers.push_back({t.cost, j, position});
        } else if (Offer& o = offers[it->second]; t.cost < o.cost) {
          o = {t.cost, j, position};
        } else if (restart > 0 && t.cost == o.cost && pick.below(++o.ties) == 0) {
          o.tmpl = j;
          o.position = position;
        }
      };
      for (std::size_t j = 0; j < tp.list.size(); ++j) evaluate(j, 0);
      for (std::size_t p = 0; p < gates.size(); ++p) {
        const auto& g = gates[p];
        rows[g.target] ^= rows[g.control];
        for (std::size_t j : tp.touching[g.target]) evaluate(j, p + 1);
      }

      std::vector<std::size_t> order(columns.size());
      std::iota(order.begin(), order.end(), 0);
      if (restart > 0) {
        Rng rng(step_seed);
        rng.shuffle(std::span(order));
      }
      SyndromeInstance inst{ColumnSet(k), s, {}};
      inst.columns.reserve(order.size());
      for (std::size_t j : order) {
        inst.columns.push_back(columns[j]);
        inst.costs.push_back(offers[j].cost);
      }
      std::vector<std::pair<std::size_t, std::size_t>> chosen;  // position, template
      for (std::size_t j : solve(inst, step_seed).support)
        chosen.emplace_back(offers[order[j]].position, offers[order[j]].tmpl);
      std::sort(chosen.begin(), chosen.end());

      std::vector<CnotGate> merged;
      merged.reserve(gates.size() + 8 * chosen.size());
      std::size_t next = 0;
      for (std::size_t p = 0; p <= gates.size(); ++p) {
        for (; next < chosen.size() && chosen[next].first == p; ++next) {
          const auto& t = tp.list[chosen[next].second];
          const auto seq = fanin_via_path(t.path, t.mask);
          merged.insert(merged.end(), seq.begin(), seq.end());
        }
        if (p < gates.size()) merged.push_back(gates[p]);
      }
      gates = std::move(merged);
    }
    return {n, std::move(gates)};
  }

  // Row k of l minus e_k, written in the basis of rows 0..k-1 of l.
  static BitVector coordinates(const BitMatrix& l, std::size_t k) {
    BitVector s = l.row(k).prefix(k);
    BitVector t(k);
    for (std::size_t i = k; i-- > 0;) {
      if (!s.test(i)) continue;
      t.set(i);
      s ^= l.row(i).prefix(k);
    }
    return t;
  }

  std::vector<std::size_t> choose(const ParityTable& table, const BitVector& t,
                                  std::uint64_t seed, std::size_t restart) {
    // Later restarts see the columns in a random order, which only changes
    // how ties are broken.
    std::vector<std::size_t> order(table.parities.size());
    std::iota(order.begin(), order.end(), 0);
    if (restart > 0) {
      Rng rng(seed);
      rng.shuffle(std::span(order));
    }
    std::vector<std::size_t> picked;
    if (cfg_.solver == ConstrainedConfig::Solver::kFast) {
      ParityTable view{SyndromeInstance{ColumnSet(t.size()), t, {}}, {}};
      for (std::size_t j : order) view.parities.push_back(table.parities[j]);
      picked = fast_heuristic_step(gr_, t.size(), t, view);
    } else {
      SyndromeInstance inst{ColumnSet(t.size()), t, {}};
      inst.columns.reserve(order.size());
      for (std::size_t j : order) {
        inst.columns.push_back(table.instance.columns[j]);
        inst.costs.push_back(table.instance.costs[j]);
      }
      picked = solve(inst, seed).support;
    }
    for (auto& j : picked) j = order[j];
    return picked;
  }

  SyndromeSolution solve(const SyndromeInstance& inst, std::uint64_t seed) const {
    const SyndromeSolution greedy =
        cfg_.niter_syndrome > 1
            ? solve_weighted_isd(inst, cfg_.niter_syndrome, seed, cfg_.deadline)
            : solve_weighted_greedy(inst);
    if (cfg_.solver != ConstrainedConfig::Solver::kExact) return greedy;
    ExactOptions opt;
    opt.node_budget = cfg_.exact_budget;
    opt.warm_start = greedy;
    try {
      return solve_exact(inst, opt);
    } catch (const BudgetExhausted& e) {
      return *e.incumbent;
    }
  }

  const ConnectivityGraph& gr_;
  const ConstrainedConfig& cfg_;
  std::vector<std::optional<ParityTable>> tables_;
  std::vector<std::optional<Templates>> templates_;
};

/// Best of cfg.niter restarts; restart 0 always runs.
CnotCircuit best_lower(LowerSynthesizer& synth, const BitMatrix& l,
                       const ConstrainedConfig& cfg, std::uint64_t seed,
                       bool* timed_out) {
  CnotCircuit best = synth.run(l, seed, 0);
  for (std::size_t r = 1; r < cfg.niter; ++r) {
    if (cfg.deadline.expired()) {
      *timed_out = true;
      break;
    }
    CnotCircuit c = synth.run(l, derive_seed(seed, {r}), r);
    if (c.size() < best.size()) best = std::move(c);
  }
  return best;
}

// Basis of rows restricted to their first `width` entries, for rank tests.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : pivots_(width) {}

  BitVector reduce(BitVector v) const {
    for (std::size_t p = 0; p < pivots_.size(); ++p)
      if (v.test(p) && pivots_[p]) v ^= *pivots_[p];
    return v;
  }
  void insert(const BitVector& v) {
    BitVector r = reduce(v);
    const std::size_t p = r.find_first();
    if (p < r.size()) pivots_[p] = std::move(r);
  }

 private:
  std::vector<std::optional<BitVector>> pivots_;
};

CnotCircuit precircuit_in_rank_space(BitMatrix m, const ConnectivityGraph& gr) {
  const std::size_t n = m.rows();
  CnotCircuit c(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t width = k + 1;
    Echelon above(width);
    for (std::size_t i = 0; i < k; ++i) above.insert(m.row(i).prefix(width));
    auto fixes = [&](const BitVector& v) { return above.reduce(v.prefix(width)).any(); };
    if (fixes(m.row(k))) continue;

    std::vector<bool> allowed(n, false);
    std::fill(allowed.begin() + static_cast<std::ptrdiff_t>(k), allowed.end(), true);
    std::optional<std::tuple<Cost, std::size_t, std::size_t>> best_key;
    std::vector<CnotGate> best_gates;
    for (std::size_t r = k + 1; r < n; ++r) {
      const auto paths = all_shortest_paths(gr, r, k, 1, &allowed);
      if (paths.empty()) continue;
      const Path& path = paths.front();
      const std::size_t inner = path.size() - 2;
      BitVector fan = m.row(k) ^ m.row(r);
      for (std::size_t i = 1; i + 1 < path.size(); ++i) fan ^= m.row(path[i]);
      std::vector<CnotGate> gates;
      Cost cost = 0;
      if (fixes(fan)) {
        gates = fanin_via_path(path, std::vector<bool>(inner, true));
        cost = 2 * inner + 1;
      } else if (fixes(m.row(k) ^ m.row(r))) {
        gates = cnot_via_path(path);
        cost = std::max<Cost>(1, 4 * inner);
      } else {
        continue;
      }
      const std::tuple<Cost, std::size_t, std::size_t> key{cost, path.size() - 1, r};
      if (!best_key || key < *best_key) {
        best_key = key;
        best_gates = std::move(gates);
      }
    }
    if (!best_key) throw SingularMatrix();
    apply_gates(m, best_gates);
    c.append(std::span<const CnotGate>(best_gates));
  }
  return c;
}

struct VariantResult {
  CnotCircuit circuit;
  std::vector<std::size_t> output_wire;
  bool timed_out = false;
};

VariantResult synthesize_variant(const BitMatrix& a, const ConnectivityGraph& g,
                                 const QubitOrdering& o,
                                 const ConstrainedConfig& cfg, std::uint64_t seed) {
  require_synthesis_ordering(o, g);
  const std::size_t n = a.rows();
  const ConnectivityGraph gr = relabel_graph(g, o);
  const BitMatrix ar = conjugate_by_order(a, o.sequence());

  CnotCircuit pre(n);
  PluFactors f;
  if (cfg.mode == ConstrainedConfig::Mode::kExact) {
    pre = precircuit_in_rank_space(ar, gr);
    f = plu_decompose(simulate(pre) * ar);
    for (std::size_t i = 0; i < n; ++i)
      if (f.perm[i] != i) throw Error("pre-circuit left a singular leading minor");
  } else {
    f = plu_decompose(ar);
  }

  VariantResult out;
  LowerSynthesizer synth(gr, cfg);
  const CnotCircuit lower = best_lower(synth, f.lower, cfg, derive_seed(seed, {0}),
                                       &out.timed_out);
  const CnotCircuit upper = transpose_circuit(best_lower(
      synth, f.upper.transposed(), cfg, derive_seed(seed, {1}), &out.timed_out));
  CnotCircuit rank_circuit = concat(upper, lower);
  if (cfg.mode == ConstrainedConfig::Mode::kExact)
    rank_circuit = concat(rank_circuit, inverse_circuit(pre));

  out.circuit = relabel_wires(rank_circuit, o.sequence());
  out.output_wire.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.output_wire[o.node(i)] = o.node(f.perm[i]);
  return out;
}

}  // namespace

CnotCircuit synth_triangular_constrained(const BitMatrix& l,
                                         const ConnectivityGraph& g,
                                         const ConstrainedConfig& cfg) {
  cfg.validate();
  if (l.rows() != g.size() || !l.is_square())
    throw ContractViolation("matrix size differs from graph");
  const QubitOrdering o = cfg.ordering ? *cfg.ordering : default_ordering(g);
  require_synthesis_ordering(o, g);
  const BitMatrix lr = conjugate_by_order(l, o.sequence());
  if (!lr.is_unit_lower_triangular())
    throw ContractViolation("matrix is not unit lower triangular in this ordering");
  const ConnectivityGraph gr = relabel_graph(g, o);
  LowerSynthesizer synth(gr, cfg);
  bool timed_out = false;
  return relabel_wires(best_lower(synth, lr, cfg, cfg.seed, &timed_out), o.sequence());
}

CnotCircuit compute_precircuit(const BitMatrix& a, const ConnectivityGraph& g,
                               const QubitOrdering& o) {
  require_synthesis_ordering(o, g);
  if (a.rows() != g.size() || !a.is_square())
    throw ContractViolation("matrix size differs from graph");
  const CnotCircuit c =
      precircuit_in_rank_space(conjugate_by_order(a, o.sequence()), relabel_graph(g, o));
  return relabel_wires(c, o.sequence());
}

ConstrainedResult synth_general_constrained(const BitMatrix& a,
                                            const ConnectivityGraph& g,
                                            const ConstrainedConfig& cfg) {
  cfg.validate();
  if (a.rows() != g.size() || !a.is_square())
    throw ContractViolation("matrix size differs from graph");
  const QubitOrdering base = cfg.ordering ? *cfg.ordering : default_ordering(g);
  std::vector<QubitOrdering> variants{base};
  if (cfg.use_symmetries && g.grid() && g.grid()->rows * g.grid()->cols == g.size())
    variants = symmetry_variants(base, g);

  std::optional<ConstrainedResult> best;
  bool timed_out = false;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    if (best && cfg.deadline.expired()) {
      timed_out = true;
      break;
    }
    auto r = synthesize_variant(a, g, variants[v], cfg, derive_seed(cfg.seed, {v}));
    timed_out = timed_out || r.timed_out;
    if (!best || r.circuit.size() < best->circuit.size())
      best = ConstrainedResult{std::move(r.circuit), std::move(r.output_wire),
                               variants[v], false};
  }
  best->timed_out = timed_out;
  return *best;
}

}  // namespace cnotsyn
