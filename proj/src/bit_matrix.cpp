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

#include "cnotsyn/bit_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cnotsyn/errors.hpp"

namespace cnotsyn {

BitMatrix::BitMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      stride_(words_for(n_cols)),
      data_(n_rows * words_for(n_cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
  if (rows.empty()) return {};
  BitMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> v;
  v.reserve(rows.size());
  for (const auto& s : rows) v.push_back(BitVector::from_string(s));
  return from_rows(v);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  const Word mask = Word{1} << (c % kWordBits);
  Word& w = data_[r * stride_ + c / kWordBits];
  if (value)
    w |= mask;
  else
    w &= ~mask;
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != n_cols_)
    throw ContractViolation("BitMatrix::set_row: length mismatch");
  std::copy(v.words().begin(), v.words().end(), row_words(r).begin());
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row_words(a).begin(), row_words(a).end(),
                   row_words(b).begin());
}

BitMatrix BitMatrix::leading_block(std::size_t k) const {
  if (k > n_rows_ || k > n_cols_)
    throw ContractViolation("leading_block: k exceeds matrix dimensions");
  BitMatrix out(k, k);
  for (std::size_t r = 0; r < k; ++r) out.set_row(r, row(r).prefix(k));
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_cols_, n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r) {
    const auto words = row_words(r);
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word bits = words[w];
      while (bits != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        t.set(w * kWordBits + b, r);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

bool BitMatrix::is_identity() const {
  return is_square() && *this == identity(n_rows_);
}

bool BitMatrix::is_unit_lower_triangular() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    if (!get(r, r)) return false;
    if (row(r).find_next(r + 1) != n_cols_) return false;
  }
  return true;
}

bool BitMatrix::is_unit_upper_triangular() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < n_rows_; ++r)
    if (row(r).find_first() != r) return false;
  return true;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < n_rows_; ++r) os << row(r).to_string() << '\n';
  return os.str();
}

BitMatrix permutation_matrix(std::span<const std::size_t> perm) {
  if (!is_permutation(perm))
    throw ContractViolation("permutation_matrix: not a permutation");
  BitMatrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p.set(i, perm[i]);
  return p;
}

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

bool is_permutation(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows())
    throw ContractViolation("mat_mul: inner dimensions differ");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row_words(i);
    const auto lhs = a.row_words(i);
    for (std::size_t w = 0; w < lhs.size(); ++w) {
      Word bits = lhs[w];
      while (bits != 0) {
        const auto k =
            w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        xor_words(dst, b.row_words(k));
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& v) {
  if (a.cols() != v.size())
    throw ContractViolation("mat_vec: dimension mismatch");
  BitVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::size_t c = 0;
    const auto row = a.row_words(r);
    for (std::size_t w = 0; w < row.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(row[w] & v.words()[w]));
    if (c & 1U) out.set(r);
  }
  return out;
}

std::size_t rank(const BitMatrix& a) {
  BitMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      if (m.get(i, c)) m.add_row(i, r);
    ++r;
  }
  return r;
}

BitMatrix inverse(const BitMatrix& a) {
  if (!a.is_square()) throw ContractViolation("inverse: matrix is not square");
  const std::size_t n = a.rows();
  BitMatrix m = a;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !m.get(p, c)) ++p;
    if (p == n) throw SingularMatrix();
    m.swap_rows(c, p);
    inv.swap_rows(c, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != c && m.get(i, c)) {
        m.add_row(i, c);
        inv.add_row(i, c);
      }
    }
  }
  return inv;
}

PluFactors plu_decompose(const BitMatrix& a) {
  if (!a.is_square())
    throw ContractViolation("plu_decompose: matrix is not square");
  const std::size_t n = a.rows();
  BitMatrix work = a;
  BitMatrix lower(n, n);
  // order[i]: the row of `a` currently sitting at position i of `work`.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !work.get(p, c)) ++p;
    if (p == n) throw SingularMatrix();
    if (p != c) {
      work.swap_rows(c, p);
      lower.swap_rows(c, p);
      std::swap(order[c], order[p]);
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      if (work.get(i, c)) {
        work.add_row(i, c);
        lower.set(i, c);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) lower.set(i, i);
  // work rows are (L U) rows; row i of L U is row order[i] of a.
  return {invert_permutation(order), std::move(lower), std::move(work)};
}

BitMatrix recompose(const PluFactors& f) {
  return permutation_matrix(f.perm) * (f.lower * f.upper);
}

bool leading_minor_invertible(const BitMatrix& a, std::size_t k) {
  if (k == 0 || k > a.rows() || k > a.cols())
    throw ContractViolation("leading_minor_invertible: k out of range");
  return rank(a.leading_block(k)) == k;
}

BitMatrix conjugate_by_order(const BitMatrix& a,
                             std::span<const std::size_t> order) {
  if (!a.is_square() || order.size() != a.rows())
    throw ContractViolation("conjugate_by_order: dimension mismatch");
  const std::size_t n = a.rows();
  BitMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(order[i], order[j])) out.set(i, j);
  return out;
}

}  // namespace cnotsyn
