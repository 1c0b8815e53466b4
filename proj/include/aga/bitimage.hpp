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

#ifndef AGA_BITIMAGE_HPP
#define AGA_BITIMAGE_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace aga {

// Feature index layout shared by the whole project:
//   index(x, y, c) = c*width*height + y*width + x
// with all coordinates wrapped on the torus.
struct GridShape {
  int width = 0;
  int height = 0;
  int colors = 1;

  int node_count() const { return width * height * colors; }

  int index(int x, int y, int c = 0) const {
    x %= width;
    if (x < 0) x += width;
    y %= height;
    if (y < 0) y += height;
    return c * width * height + y * width + x;
  }

  // Inverse of index(); always returns canonical (wrapped) coordinates.
  void decode(int i, int& x, int& y, int& c) const {
    c = i / (width * height);
    const int rest = i % (width * height);
    y = rest / width;
    x = rest % width;
  }

  bool operator==(const GridShape&) const = default;
};

// A binary (or color-indexed) pixel grid on a torus, stored as a flat bit
// array. For colors > 1 at most one color bit may be set per pixel.
class BitImage {
 public:
  BitImage() = default;

  explicit BitImage(GridShape shape)
      : shape_(shape), words_((shape.node_count() + 63) / 64, 0) {}

  BitImage(int width, int height, int colors = 1)
      : BitImage(GridShape{width, height, colors}) {}

  const GridShape& shape() const { return shape_; }
  int width() const { return shape_.width; }
  int height() const { return shape_.height; }
  int colors() const { return shape_.colors; }

  bool test(int x, int y, int c = 0) const {
    const int i = shape_.index(x, y, c);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  bool test_index(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int x, int y, int c = 0) {
    // Cross-color conflicts violate the one-color-per-pixel invariant.
    if (shape_.colors > 1) {
      for (int other = 0; other < shape_.colors; ++other) {
        if (other != c && test(x, y, other))
          throw std::runtime_error("BitImage: pixel already set in another color");
      }
    }
    const int i = shape_.index(x, y, c);
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void set_index(int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  std::span<const std::uint64_t> words() const { return words_; }

  int popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  std::vector<int> set_bits() const {
    std::vector<int> out;
    out.reserve(popcount());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const BitImage& other) const = default;

 private:
  GridShape shape_;
  std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of flat bit arrays, bit 0 first. This is the
// canonical ordering of observation sets; it only depends on bit values, not
// on word endianness.
inline int compare_bits(std::span<const std::uint64_t> a,
                        std::span<const std::uint64_t> b) {
  const std::size_t m = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k] != b[k]) {
      const int bit = std::countr_zero(a[k] ^ b[k]);
      return ((a[k] >> bit) & 1u) ? 1 : -1;
    }
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

inline bool bits_less(std::span<const std::uint64_t> a,
                      std::span<const std::uint64_t> b) {
  return compare_bits(a, b) < 0;
}

}  // namespace aga

#endif  // AGA_BITIMAGE_HPP
