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

#include "cnotsyn/syndrome.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "cnotsyn/rng.hpp"

namespace cnotsyn {

void ColumnSet::push_back(std::span<const Word> column) {
  if (column.size() != stride_)
    throw ContractViolation("ColumnSet: column has the wrong word count");
  data_.insert(data_.end(), column.begin(), column.end());
  ++count_;
}

void ColumnSet::push_back(const BitVector& column) {
  if (column.size() != n_bits_)
    throw ContractViolation("ColumnSet: column has the wrong length");
  push_back(column.words());
}

SyndromeInstance SyndromeInstance::make(const std::vector<BitVector>& columns,
                                        BitVector target,
                                        std::vector<Cost> costs) {
  SyndromeInstance inst{ColumnSet(target.size()), std::move(target),
                        std::move(costs)};
  inst.columns.reserve(columns.size());
  for (const auto& c : columns) inst.columns.push_back(c);
  if (inst.costs.empty()) inst.costs.assign(columns.size(), 1);
  inst.validate();
  return inst;
}

void SyndromeInstance::validate() const {
  if (columns.bits() != target.size())
    throw ContractViolation("syndrome instance: column length differs from target");
  if (costs.size() != columns.size())
    throw ContractViolation("syndrome instance: one cost per column required");
}

bool SyndromeInstance::has_canonical_columns() const {
  std::vector<bool> seen(n(), false);
  std::size_t found = 0;
  for (std::size_t j = 0; j < m(); ++j) {
    const auto col = columns[j];
    if (popcount_words(col) != 1) continue;
    const BitVector v(n(), col);
    const std::size_t i = v.find_first();
    if (!seen[i]) {
      seen[i] = true;
      ++found;
    }
  }
  return found == n();
}

SyndromeSolution make_solution(const SyndromeInstance& inst,
                               std::vector<std::size_t> support) {
  std::sort(support.begin(), support.end());
  Cost w = 0;
  for (std::size_t j : support) w += inst.costs[j];
  return {std::move(support), w};
}

bool is_valid(const SyndromeInstance& inst, const SyndromeSolution& sol) {
  std::vector<Word> acc(inst.columns.stride(), 0);
  Cost w = 0;
  for (std::size_t k = 0; k < sol.support.size(); ++k) {
    const std::size_t j = sol.support[k];
    if (j >= inst.m()) return false;
    if (k > 0 && sol.support[k - 1] >= j) return false;
    xor_words(acc, inst.columns[j]);
    w += inst.costs[j];
  }
  return std::equal(acc.begin(), acc.end(), inst.target.words().begin()) &&
         w == sol.weight;
}

namespace {

std::vector<std::size_t> support_from_flags(const std::vector<std::uint8_t>& flags) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < flags.size(); ++j)
    if (flags[j]) out.push_back(j);
  return out;
}

/// Some subset of columns xoring to `residual`, found by elimination.
std::vector<std::size_t> solve_linear(const SyndromeInstance& inst,
                                      std::span<const Word> residual) {
  const std::size_t n = inst.n();
  const std::size_t stride = inst.columns.stride();
  const std::size_t m_words = words_for(inst.m());
  // Each basis vector remembers which columns it is made of.
  std::vector<std::vector<Word>> vecs(n);
  std::vector<std::vector<Word>> combos(n);
  std::vector<Word> v(stride);
  std::vector<Word> combo(m_words);
  for (std::size_t j = 0; j < inst.m(); ++j) {
    std::copy(inst.columns[j].begin(), inst.columns[j].end(), v.begin());
    std::fill(combo.begin(), combo.end(), 0);
    combo[j / kWordBits] |= Word{1} << (j % kWordBits);
    for (std::size_t p = 0; p < n; ++p) {
      if (!test_bit(v, p)) continue;
      if (vecs[p].empty()) {
        vecs[p] = v;
        combos[p] = combo;
        break;
      }
      xor_words(v, vecs[p]);
      xor_words(combo, combos[p]);
    }
  }
  std::vector<Word> r(residual.begin(), residual.end());
  std::fill(combo.begin(), combo.end(), 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (!test_bit(r, p)) continue;
    if (vecs[p].empty()) throw Infeasible();
    xor_words(r, vecs[p]);
    xor_words(combo, combos[p]);
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < inst.m(); ++j)
    if (test_bit(combo, j)) out.push_back(j);
  return out;
}

/// Index of the column minimizing wt(residual ^ column), lowest index on
/// ties, provided that weight is strictly below `limit`; m() otherwise.
std::size_t best_column(const ColumnSet& cols, std::span<const Word> residual,
                        std::size_t limit, std::size_t* best_weight) {
  std::size_t best = cols.size();
  std::size_t best_w = limit;
  const Word* data = cols.data();
  if (cols.stride() == 1) {
    const Word r = residual[0];
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto w = static_cast<std::size_t>(std::popcount(r ^ data[j]));
      if (w < best_w) {
        best_w = w;
        best = j;
      }
    }
  } else {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const std::size_t w = xor_popcount(residual, cols[j]);
      if (w < best_w) {
        best_w = w;
        best = j;
      }
    }
  }
  *best_weight = best_w;
  return best;
}

/// Greedy descent from `residual`, toggling chosen columns in `flags`.
void greedy_descent(const SyndromeInstance& inst, std::vector<Word>& residual,
                    std::vector<std::uint8_t>& flags) {
  std::size_t cur = popcount_words(residual);
  while (cur > 0) {
    std::size_t next_w = 0;
    const std::size_t j = best_column(inst.columns, residual, cur, &next_w);
    if (j == inst.m()) {
      for (std::size_t k : solve_linear(inst, residual)) flags[k] ^= 1U;
      std::fill(residual.begin(), residual.end(), 0);
      return;
    }
    xor_words(residual, inst.columns[j]);
    flags[j] ^= 1U;
    cur = next_w;
  }
}

}  // namespace

SyndromeSolution solve_greedy(const SyndromeInstance& inst) {
  inst.validate();
  std::vector<Word> residual(inst.target.words().begin(),
                             inst.target.words().end());
  std::vector<std::uint8_t> flags(inst.m(), 0);
  greedy_descent(inst, residual, flags);
  return make_solution(inst, support_from_flags(flags));
}

namespace {

class TreeSearch {
 public:
  TreeSearch(const SyndromeInstance& inst, std::size_t width, std::size_t depth)
      : inst_(inst),
        width_(std::max<std::size_t>(width, 1)),
        depth_(depth),
        scratch_(depth + 1, std::vector<Word>(inst.columns.stride())) {}

  // (weight after xor, column) for the best `width_` columns.
  std::vector<std::pair<std::size_t, std::size_t>> children(
      std::span<const Word> s) const {
    std::vector<std::pair<std::size_t, std::size_t>> all(inst_.m());
    for (std::size_t j = 0; j < inst_.m(); ++j)
      all[j] = {xor_popcount(s, inst_.columns[j]), j};
    const std::size_t keep = std::min(width_, all.size());
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep),
                      all.end());
    all.resize(keep);
    return all;
  }

  // Estimated remaining cost from s with `levels` of lookahead: either stop
  // (and pay wt(s) through unit vectors) or take one more column.
  std::size_t value(std::span<const Word> s, std::size_t levels) {
    const std::size_t here = popcount_words(s);
    if (levels == 0 || here == 0) return here;
    std::size_t best = here;
    for (const auto& [w, j] : children(s)) {
      if (best <= 1) break;
      best = std::min(best, 1 + child_value(s, j, w, levels - 1));
    }
    return best;
  }

  SyndromeSolution run() {
    std::vector<Word> s(inst_.target.words().begin(), inst_.target.words().end());
    std::vector<std::uint8_t> flags(inst_.m(), 0);
    while (!is_zero_words(s)) {
      const std::size_t here = popcount_words(s);
      std::size_t best = std::numeric_limits<std::size_t>::max();
      std::size_t best_j = inst_.m();
      for (const auto& [w, j] : children(s)) {
        const std::size_t cand = 1 + child_value(s, j, w, depth_ - 1);
        if (cand < best) {
          best = cand;
          best_j = j;
        }
      }
      if (best_j == inst_.m() || best > here) {
        greedy_descent(inst_, s, flags);
        break;
      }
      xor_words(s, inst_.columns[best_j]);
      flags[best_j] ^= 1U;
    }
    return make_solution(inst_, support_from_flags(flags));
  }

 private:
  std::size_t child_value(std::span<const Word> s, std::size_t j,
                          std::size_t w, std::size_t levels) {
    if (w == 0 || levels == 0) return w;
    auto& next = scratch_[levels];
    std::copy(s.begin(), s.end(), next.begin());
    xor_words(next, inst_.columns[j]);
    return value(next, levels);
  }

  const SyndromeInstance& inst_;
  std::size_t width_;
  std::size_t depth_;
  std::vector<std::vector<Word>> scratch_;
};

}  // namespace

SyndromeSolution solve_tree(const SyndromeInstance& inst, std::size_t width,
                            std::size_t depth) {
  inst.validate();
  if (width == 0 || depth == 0)
    throw ContractViolation("solve_tree: width and depth must be positive");
  if (depth == 1) return solve_greedy(inst);
  return TreeSearch(inst, width, depth).run();
}

BasisTransform::BasisTransform(const BitMatrix& p)
    : n_(p.rows()), stride_(words_for(p.rows())), chunks_((p.rows() + 7) / 8) {
  if (!p.is_square()) throw ContractViolation("BasisTransform: P must be square");
  // Column c of P, as packed words.
  const BitMatrix pt = p.transposed();
  tables_.assign(chunks_ * 256 * stride_, 0);
  for (std::size_t c = 0; c < chunks_; ++c) {
    Word* table = tables_.data() + c * 256 * stride_;
    for (std::size_t x = 1; x < 256; ++x) {
      const auto low = static_cast<std::size_t>(std::countr_zero(x));
      const std::size_t bit = c * 8 + low;
      Word* dst = table + x * stride_;
      const Word* prev = table + (x & (x - 1)) * stride_;
      std::copy(prev, prev + stride_, dst);
      if (bit < n_) {
        const auto col = pt.row_words(bit);
        for (std::size_t w = 0; w < stride_; ++w) dst[w] ^= col[w];
      }
    }
  }
}

void BasisTransform::apply(std::span<const Word> in, std::span<Word> out) const {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t c = 0; c < chunks_; ++c) {
    const auto byte = static_cast<std::size_t>(
        (in[c / 8] >> ((c % 8) * 8)) & 0xFFU);
    if (byte == 0) continue;
    const Word* entry = tables_.data() + (c * 256 + byte) * stride_;
    for (std::size_t w = 0; w < stride_; ++w) out[w] ^= entry[w];
  }
}

SyndromeInstance BasisTransform::apply(const SyndromeInstance& inst) const {
  if (inst.n() != n_) throw ContractViolation("BasisTransform: dimension mismatch");
  SyndromeInstance out{ColumnSet(n_), BitVector(n_), inst.costs};
  out.columns.reserve(inst.m());
  std::vector<Word> buf(stride_);
  for (std::size_t j = 0; j < inst.m(); ++j) {
    apply(inst.columns[j], buf);
    out.columns.push_back(buf);
  }
  apply(inst.target.words(), out.target.words());
  return out;
}

std::vector<std::size_t> information_set(const SyndromeInstance& inst,
                                         std::span<const std::size_t> order) {
  const std::size_t n = inst.n();
  std::vector<std::vector<Word>> basis(n);
  std::vector<std::size_t> chosen;
  std::vector<Word> v(inst.columns.stride());
  for (std::size_t j : order) {
    std::copy(inst.columns[j].begin(), inst.columns[j].end(), v.begin());
    for (std::size_t p = 0; p < n; ++p) {
      if (!test_bit(v, p)) continue;
      if (basis[p].empty()) {
        basis[p] = v;
        chosen.push_back(j);
        break;
      }
      xor_words(v, basis[p]);
    }
    if (chosen.size() == n) break;
  }
  return chosen;
}

namespace {

/// P with P * [columns of the information set] = I, or nullopt when the set
/// does not span.
std::optional<BasisTransform> transform_for(const SyndromeInstance& inst,
                                            std::span<const std::size_t> info) {
  const std::size_t n = inst.n();
  if (info.size() != n) return std::nullopt;
  BitMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      if (test_bit(inst.columns[info[i]], r)) b.set(r, i);
  return BasisTransform(inverse(b));
}

template <typename Decode, typename Order>
SyndromeSolution randomized_bases(const SyndromeInstance& inst,
                                  std::size_t n_iter, std::uint64_t seed,
                                  const Deadline& deadline, Decode&& decode,
                                  Order&& make_order) {
  inst.validate();
  if (n_iter == 0) throw ContractViolation("ISD: n_iter must be positive");
  std::optional<SyndromeSolution> best;
  std::size_t first = 0;
  if (inst.has_canonical_columns()) {
    best = decode(inst);
    first = 1;
  }
  for (std::size_t it = first; it < n_iter; ++it) {
    if (best && deadline.expired()) break;
    Rng rng(derive_seed(seed, {it}));
    const auto order = make_order(rng);
    const auto info = information_set(inst, order);
    const auto p = transform_for(inst, info);
    SyndromeSolution sol;
    if (p) {
      const SyndromeInstance moved = p->apply(inst);
      sol = make_solution(inst, decode(moved).support);
    } else {
      sol = make_solution(inst, solve_greedy(inst).support);
    }
    if (!best || sol.weight < best->weight) best = std::move(sol);
  }
  return *best;
}

}  // namespace

SyndromeSolution solve_in_random_bases(const SyndromeInstance& inst,
                                       std::size_t n_iter, std::uint64_t seed,
                                       const Deadline& deadline,
                                       const Decoder& decoder) {
  return randomized_bases(inst, n_iter, seed, deadline, decoder,
                          [&inst](Rng& rng) {
                            std::vector<std::size_t> order(inst.m());
                            std::iota(order.begin(), order.end(), 0);
                            rng.shuffle(std::span(order));
                            return order;
                          });
}

SyndromeSolution solve_isd(const SyndromeInstance& inst, std::size_t n_iter,
                           std::uint64_t seed, const Deadline& deadline) {
  return solve_in_random_bases(
      inst, n_iter, seed, deadline,
      [](const SyndromeInstance& x) { return solve_greedy(x); });
}

SyndromeSolution solve_weighted_isd(const SyndromeInstance& inst,
                                    std::size_t n_iter, std::uint64_t seed,
                                    const Deadline& deadline) {
  return randomized_bases(
      inst, n_iter, seed, deadline,
      [](const SyndromeInstance& x) { return solve_weighted_greedy(x); },
      [&inst](Rng& rng) {
        // Cheapest columns first; random order within a cost class.
        std::vector<std::size_t> order(inst.m());
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(std::span(order));
        std::stable_sort(order.begin(), order.end(),
                         [&inst](std::size_t a, std::size_t b) {
                           return inst.costs[a] < inst.costs[b];
                         });
        return order;
      });
}

SyndromeSolution solve_weighted_greedy(const SyndromeInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  constexpr Cost kNone = std::numeric_limits<Cost>::max();

  std::vector<Cost> unit_cost(n, kNone);
  std::vector<std::size_t> unit_col(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto col = inst.columns[j];
    if (popcount_words(col) != 1) continue;
    const std::size_t i = BitVector(n, col).find_first();
    if (inst.costs[j] < unit_cost[i]) {
      unit_cost[i] = inst.costs[j];
      unit_col[i] = j;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (unit_col[i] == m)
      throw ContractViolation("weighted greedy: unit vector missing among columns");

  // bc(s ^ v) = bc(s) + sum_{v} unit_cost - 2 * sum_{v & s} unit_cost.
  auto weighted_ones = [&](std::span<const Word> v) {
    Cost total = 0;
    for (std::size_t w = 0; w < v.size(); ++w) {
      Word bits = v[w];
      while (bits != 0) {
        total += unit_cost[w * kWordBits +
                           static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
    }
    return total;
  };
  std::vector<Cost> column_mass(m);
  for (std::size_t j = 0; j < m; ++j) column_mass[j] = weighted_ones(inst.columns[j]);

  std::vector<Word> s(inst.target.words().begin(), inst.target.words().end());
  std::vector<Word> overlap(inst.columns.stride());
  std::vector<std::uint8_t> flags(m, 0);
  Cost bc = weighted_ones(s);
  while (!is_zero_words(s)) {
    std::size_t best = m;
    Cost best_score = kNone;
    Cost best_next_bc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto col = inst.columns[j];
      for (std::size_t w = 0; w < overlap.size(); ++w) overlap[w] = col[w] & s[w];
      const Cost shared = weighted_ones(overlap);
      const Cost next_bc = bc + column_mass[j] - 2 * shared;
      const Cost score = inst.costs[j] + next_bc;
      if (score < best_score ||
          (score == best_score && inst.costs[j] < inst.costs[best])) {
        best = j;
        best_score = score;
        best_next_bc = next_bc;
      }
    }
    if (best_next_bc >= bc) {
      // No progress on the basis cost: finish with unit vectors.
      for (std::size_t i = 0; i < n; ++i)
        if (test_bit(s, i)) flags[unit_col[i]] ^= 1U;
      break;
    }
    xor_words(s, inst.columns[best]);
    flags[best] ^= 1U;
    bc = best_next_bc;
  }
  return make_solution(inst, support_from_flags(flags));
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const SyndromeInstance& inst, std::uint64_t budget)
      : inst_(inst),
        n_(inst.n()),
        m_(inst.m()),
        stride_(inst.columns.stride()),
        budget_(budget) {
    // Echelon bases of each column suffix, for span-membership pruning.
    suffix_basis_.assign((m_ + 1) * n_ * stride_, 0);
    suffix_has_.assign((m_ + 1) * n_, 0);
    suffix_max_weight_.assign(m_ + 1, 0);
    suffix_min_cost_.assign(m_ + 1, std::numeric_limits<Cost>::max());
    std::vector<Word> v(stride_);
    for (std::size_t j = m_; j-- > 0;) {
      std::copy_n(suffix_basis_.begin() + static_cast<std::ptrdiff_t>((j + 1) * n_ * stride_),
                  n_ * stride_,
                  suffix_basis_.begin() + static_cast<std::ptrdiff_t>(j * n_ * stride_));
      std::copy_n(suffix_has_.begin() + static_cast<std::ptrdiff_t>((j + 1) * n_), n_,
                  suffix_has_.begin() + static_cast<std::ptrdiff_t>(j * n_));
      std::copy(inst.columns[j].begin(), inst.columns[j].end(), v.begin());
      for (std::size_t p = 0; p < n_; ++p) {
        if (!test_bit(v, p)) continue;
        if (!suffix_has_[j * n_ + p]) {
          suffix_has_[j * n_ + p] = 1;
          std::copy(v.begin(), v.end(), basis_vec(j, p).begin());
          break;
        }
        xor_words(v, basis_vec(j, p));
      }
      suffix_max_weight_[j] =
          std::max(suffix_max_weight_[j + 1], popcount_words(inst.columns[j]));
      suffix_min_cost_[j] = std::min(suffix_min_cost_[j + 1], inst.costs[j]);
    }
    residuals_.assign((m_ + 1) * stride_, 0);
  }

  void seed_incumbent(const SyndromeSolution& sol) {
    if (!best_ || sol.weight < best_->weight) best_ = sol;
  }

  SyndromeSolution run() {
    std::copy(inst_.target.words().begin(), inst_.target.words().end(),
              residuals_.begin());
    search(0, 0);
    if (exhausted_) throw BudgetExhausted(best_);
    if (!best_) throw Infeasible();
    return *best_;
  }

 private:
  std::span<Word> basis_vec(std::size_t j, std::size_t p) {
    return {suffix_basis_.data() + (j * n_ + p) * stride_, stride_};
  }
  std::span<Word> residual(std::size_t depth) {
    return {residuals_.data() + depth * stride_, stride_};
  }

  bool in_suffix_span(std::span<const Word> r, std::size_t j) {
    scratch_.assign(r.begin(), r.end());
    for (std::size_t p = 0; p < n_; ++p) {
      if (!test_bit(scratch_, p)) continue;
      if (!suffix_has_[j * n_ + p]) return false;
      xor_words(scratch_, basis_vec(j, p));
    }
    return true;
  }

  // Residual for position j lives in residuals_[j].
  void search(std::size_t j, Cost cost) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const auto r = residual(j);
    if (is_zero_words(r)) {
      if (!best_ || cost < best_->weight) best_ = make_solution(inst_, chosen_);
      return;
    }
    if (j == m_) return;
    const std::size_t wt = popcount_words(r);
    const std::size_t max_w = suffix_max_weight_[j];
    if (max_w == 0) return;
    const Cost lower = static_cast<Cost>((wt + max_w - 1) / max_w) * suffix_min_cost_[j];
    if (best_ && cost + lower >= best_->weight) return;
    if (!in_suffix_span(r, j)) return;

    const auto col = inst_.columns[j];
    const bool include_first = xor_popcount(r, col) < wt;
    for (int pass = 0; pass < 2; ++pass) {
      const bool include = (pass == 0) == include_first;
      auto next = residual(j + 1);
      std::copy(r.begin(), r.end(), next.begin());
      if (include) {
        xor_words(next, col);
        chosen_.push_back(j);
        search(j + 1, cost + inst_.costs[j]);
        chosen_.pop_back();
      } else {
        search(j + 1, cost);
      }
      // Child calls reuse residual slots beyond j only.
    }
  }

  const SyndromeInstance& inst_;
  std::size_t n_;
  std::size_t m_;
  std::size_t stride_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Word> suffix_basis_;
  std::vector<std::uint8_t> suffix_has_;
  std::vector<std::size_t> suffix_max_weight_;
  std::vector<Cost> suffix_min_cost_;
  std::vector<Word> residuals_;
  std::vector<Word> scratch_;
  std::vector<std::size_t> chosen_;
  std::optional<SyndromeSolution> best_;
};

}  // namespace

SyndromeSolution solve_exact(const SyndromeInstance& inst,
                             const ExactOptions& options) {
  inst.validate();
  BranchAndBound bnb(inst, options.node_budget);
  if (options.warm_start) {
    if (!is_valid(inst, *options.warm_start))
      throw ContractViolation("solve_exact: warm start is not a valid solution");
    bnb.seed_incumbent(*options.warm_start);
  } else if (inst.has_canonical_columns()) {
    bnb.seed_incumbent(solve_weighted_greedy(inst));
  }
  return bnb.run();
}

GeneratorMatrix generator_from_parities(const SyndromeInstance& inst) {
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  if (m < n) throw ContractViolation("generator: fewer columns than rows");
  for (std::size_t i = 0; i < n; ++i)
    if (inst.columns.vector(i) != BitVector::unit(n, i))
      throw ContractViolation("generator: first n columns must be the unit vectors");
  BitMatrix g(m, m - n);
  for (std::size_t j = n; j < m; ++j) {
    const auto col = inst.columns[j];
    for (std::size_t i = 0; i < n; ++i)
      if (test_bit(col, i)) g.set(i, j - n);
    g.set(j, j - n);
  }
  return {std::move(g)};
}

ParityGraph parity_graph(const std::vector<BitVector>& history) {
  if (history.empty()) throw ContractViolation("parity graph: empty history");
  const std::size_t n = history.front().size();
  if (history.size() < n)
    throw ContractViolation("parity graph: history shorter than the register");
  for (std::size_t i = 0; i < n; ++i)
    if (history[i] != BitVector::unit(n, i))
      throw ContractViolation("parity graph: history must start with unit vectors");

  const std::size_t m = history.size();
  ParityGraph out;
  out.n_canonical = n;
  out.generator.matrix = BitMatrix(m, m - n);
  std::unordered_map<BitVector, std::size_t, BitVectorHash> latest;
  for (std::size_t i = 0; i < n; ++i) latest[history[i]] = i;

  for (std::size_t j = n; j < m; ++j) {
    if (history[j].size() != n)
      throw ContractViolation("parity graph: parity length mismatch");
    bool found = false;
    for (std::size_t a = j; a-- > 0 && !found;) {
      const auto it = latest.find(history[j] ^ history[a]);
      if (it == latest.end() || it->second == a) continue;
      const std::size_t b = it->second;
      out.parents.push_back({std::min(a, b), std::max(a, b)});
      out.generator.matrix.set(a, j - n);
      out.generator.matrix.set(b, j - n);
      out.generator.matrix.set(j, j - n);
      found = true;
    }
    if (!found) throw Error("parity graph: history is not chronologically closed");
    latest[history[j]] = j;
  }
  return out;
}

}  // namespace cnotsyn
