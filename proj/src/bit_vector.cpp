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

#include "cnotsyn/bit_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnotsyn {

BitVector::BitVector(std::size_t n_bits, std::span<const Word> words)
    : n_bits_(n_bits), words_(words.begin(), words.end()) {
  if (words_.size() != words_for(n_bits))
    throw std::invalid_argument("BitVector: word count does not match size");
  if (n_bits % kWordBits != 0 && !words_.empty())
    words_.back() &= (Word{1} << (n_bits % kWordBits)) - 1;
}

BitVector BitVector::unit(std::size_t n_bits, std::size_t index) {
  BitVector v(n_bits);
  v.set(index);
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVector: expected only '0' and '1'");
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

void BitVector::reset() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= n_bits_) return n_bits_;
  std::size_t w = from / kWordBits;
  Word cur = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur != 0)
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w == words_.size()) return n_bits_;
    cur = words_[w];
  }
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_first(); i < n_bits_; i = find_next(i + 1))
    out.push_back(i);
  return out;
}

BitVector BitVector::prefix(std::size_t n) const {
  if (n > n_bits_) throw std::out_of_range("BitVector::prefix");
  return resized(n);
}

BitVector BitVector::resized(std::size_t n) const {
  BitVector out(n);
  const std::size_t shared = std::min(out.words_.size(), words_.size());
  std::copy_n(words_.begin(), shared, out.words_.begin());
  if (n % kWordBits != 0 && !out.words_.empty())
    out.words_.back() &= (Word{1} << (n % kWordBits)) - 1;
  return out;
}

bool BitVector::dot(const BitVector& other) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  return c & 1U;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.n_bits_ != n_bits_)
    throw std::invalid_argument("BitVector: size mismatch in xor");
  xor_words(words_, other.words_);
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(n_bits_, '0');
  for (std::size_t i = 0; i < n_bits_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::size_t hash_words(std::span<const Word> words) noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Word w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  return hash_words(v.words()) ^ v.size();
}

}  // namespace cnotsyn
