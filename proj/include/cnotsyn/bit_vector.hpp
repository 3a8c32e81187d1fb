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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cnotsyn {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n_bits) {
  return (n_bits + kWordBits - 1) / kWordBits;
}

// Word-span helpers shared by the packed containers.
inline void xor_words(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

inline std::size_t popcount_words(std::span<const Word> v) {
  std::size_t c = 0;
  for (Word w : v) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t xor_popcount(std::span<const Word> a,
                                std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w)
    c += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
  return c;
}

inline bool is_zero_words(std::span<const Word> v) {
  for (Word w : v)
    if (w != 0) return false;
  return true;
}

inline bool test_bit(std::span<const Word> v, std::size_t i) {
  return (v[i / kWordBits] >> (i % kWordBits)) & 1U;
}

/// A fixed-length vector over GF(2), packed 64 entries per word.
/// Storage bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n_bits)
      : n_bits_(n_bits), words_(words_for(n_bits), 0) {}
  BitVector(std::size_t n_bits, std::span<const Word> words);

  static BitVector unit(std::size_t n_bits, std::size_t index);
  /// Parses a string of '0'/'1' characters; entry i is character i.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return n_bits_; }
  bool empty() const { return n_bits_ == 0; }

  bool test(std::size_t i) const { return test_bit(words_, i); }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void reset();

  std::size_t count() const { return popcount_words(words_); }
  bool none() const { return is_zero_words(words_); }
  bool any() const { return !none(); }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }
  std::vector<std::size_t> ones() const;

  /// First `n` entries (n <= size()).
  BitVector prefix(std::size_t n) const;
  /// Same entries, zero-extended or truncated to `n`.
  BitVector resized(std::size_t n) const;

  /// Inner product over GF(2).
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVector& other) const = default;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::string to_string() const;

 private:
  std::size_t n_bits_ = 0;
  std::vector<Word> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

std::size_t hash_words(std::span<const Word> words) noexcept;

}  // namespace cnotsyn
