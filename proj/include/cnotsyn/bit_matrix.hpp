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
#include <span>
#include <string>
#include <vector>

#include "cnotsyn/bit_vector.hpp"

namespace cnotsyn {

/// Dense GF(2) matrix with bit-packed, row-major storage.
///
/// A linear reversible operator on n wires is an invertible n x n
/// BitMatrix; a CNOT(c, t) acts on it as the row operation
/// row[t] ^= row[c].
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t n_rows, std::size_t n_cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVector>& rows);
  /// Rows given as '0'/'1' strings of equal length.
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  bool is_square() const { return n_rows_ == n_cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return test_bit(row_words(r), c);
  }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  std::span<const Word> row_words(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<Word> row_words(std::size_t r) {
    return {data_.data() + r * stride_, stride_};
  }
  BitVector row(std::size_t r) const { return BitVector(n_cols_, row_words(r)); }
  BitVector column(std::size_t c) const;
  void set_row(std::size_t r, const BitVector& v);

  /// row[dst] ^= row[src], in place.
  void add_row(std::size_t dst, std::size_t src) {
    xor_words(row_words(dst), row_words(src));
  }
  void swap_rows(std::size_t a, std::size_t b);

  /// Top-left k x k block.
  BitMatrix leading_block(std::size_t k) const;
  BitMatrix transposed() const;
  bool is_identity() const;
  bool is_unit_lower_triangular() const;
  bool is_unit_upper_triangular() const;

  bool operator==(const BitMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Row-permuted unit triangular factors: permutation_matrix(perm) * lower *
/// upper reproduces the factored matrix.
struct PluFactors {
  std::vector<std::size_t> perm;
  BitMatrix lower;
  BitMatrix upper;
};

/// Permutation matrix whose row i has its single one in column perm[i], so
/// (permutation_matrix(perm) * X).row(i) == X.row(perm[i]).
BitMatrix permutation_matrix(std::span<const std::size_t> perm);
std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm);
bool is_permutation(std::span<const std::size_t> perm);

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  return mat_mul(a, b);
}
/// Matrix-vector product a * v.
BitVector mat_vec(const BitMatrix& a, const BitVector& v);

std::size_t rank(const BitMatrix& a);
BitMatrix inverse(const BitMatrix& a);

/// Pivots on the first nonzero entry at or below the diagonal of each
/// column, so the factorization is deterministic.
PluFactors plu_decompose(const BitMatrix& a);
BitMatrix recompose(const PluFactors& f);

/// True iff the top-left k x k block has full rank.
bool leading_minor_invertible(const BitMatrix& a, std::size_t k);

/// Reorders rows and columns together: out[i][j] = a[order[i]][order[j]].
BitMatrix conjugate_by_order(const BitMatrix& a,
                             std::span<const std::size_t> order);

}  // namespace cnotsyn
