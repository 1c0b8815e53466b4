// Copyright 2026 The AGA Authors
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

#ifndef AGA_BITSET_HPP
#define AGA_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace aga {

// Fixed-universe bitset over {0..n-1}. Candidate sets in the pre-solver are
// dense subsets of the node set, so word-parallel intersection is the hot
// operation.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int n, bool fill = false)
      : n_(n), words_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    if (fill) trim();
  }

  int universe() const { return n_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  void assign_single(int i) {
    clear();
    set(i);
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  // Index of the only element; caller guarantees count() == 1.
  int single() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    assert(false);
    return -1;
  }

  void intersect(const Bitset& other) {
    assert(other.n_ == n_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const Bitset& other) const = default;

 private:
  void trim() {
    const int extra = static_cast<int>(words_.size()) * 64 - n_;
    if (extra > 0 && !words_.empty()) {
      words_.back() &= ~std::uint64_t{0} >> extra;
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace aga

#endif  // AGA_BITSET_HPP
