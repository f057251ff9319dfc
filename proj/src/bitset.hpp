// Copyright 2026 The alphaline Authors
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

#ifndef ALPHALINE_SRC_BITSET_HPP
#define ALPHALINE_SRC_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace alphaline::detail {

// Fixed-width bitset sized at runtime. All operands in one search share a width.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : words_((static_cast<std::size_t>(bits) + 63) / 64, 0) {}

  void set(int i) { words_[idx(i)] |= bit(i); }
  void reset(int i) { words_[idx(i)] &= ~bit(i); }
  bool test(int i) const { return (words_[idx(i)] & bit(i)) != 0; }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
    return c;
  }

  // Lowest set bit, or -1.
  int first() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    }
    return -1;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  Bitset& and_not(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(static_cast<int>(k * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i) >> 6; }
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

  std::vector<std::uint64_t> words_;
};

}  // namespace alphaline::detail

#endif  // ALPHALINE_SRC_BITSET_HPP
