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

#ifndef AGA_PERMUTATION_HPP
#define AGA_PERMUTATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "aga/worlds.hpp"

namespace aga {

// A permutation of {0..n-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::int32_t> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  std::int32_t operator[](int i) const { return image_[i]; }
  std::int32_t apply(int i) const { return image_[i]; }
  const std::vector<std::int32_t>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  // Cycle notation, fixed points omitted; "()" for the identity.
  std::string cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::int32_t> image_;
};

// (p o q)[i] = p[q[i]] (apply q first).
Permutation compose(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// A partial injective node map; -1 marks unmapped sources.
class IncompletePermutation {
 public:
  IncompletePermutation() = default;
  explicit IncompletePermutation(std::vector<std::int32_t> image);

  static IncompletePermutation empty(int n) {
    return IncompletePermutation(std::vector<std::int32_t>(n, -1));
  }
  static IncompletePermutation from_pairs(
      int n, std::span<const std::pair<int, int>> pairs);

  int size() const { return static_cast<int>(image_.size()); }
  std::int32_t target(int i) const { return image_[i]; }
  bool maps(int i) const { return image_[i] >= 0; }
  int domain_size() const { return mapped_; }
  bool is_total() const { return mapped_ == size(); }
  const std::vector<std::int32_t>& image() const { return image_; }

  // Requires a total mapping.
  Permutation to_permutation() const;

  // Whether the full permutation acts exactly like this map on its domain.
  bool agrees_with(const Permutation& p) const;

  bool operator==(const IncompletePermutation&) const = default;
  bool operator<(const IncompletePermutation& other) const {
    return image_ < other.image_;
  }

 private:
  std::vector<std::int32_t> image_;
  int mapped_ = 0;
};

// A set of permutations closed under composition, with the generator list
// that produced it.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  // Breadth-first closure of the generators under composition. The identity
  // is always a member (also of the closure of an empty generator list for
  // n > 0); termination follows from the group being finite.
  static PermutationGroup close(std::vector<Permutation> generators, int n = -1);

  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const { return index_.count(p) > 0; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  // Some element agreeing with `partial` on its whole domain, if any.
  std::optional<Permutation> find_matching(
      const IncompletePermutation& partial) const;

 private:
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::unordered_set<Permutation, PermutationHash> index_;
};

// Pixel permutations of a width x height x colors grid.
Permutation translation_permutation(const GridShape& shape, int dx, int dy);
Permutation rotation180_permutation(const GridShape& shape);
// 90-degree counterclockwise rotation about the origin; requires a square
// grid.
Permutation rotation90_permutation(const GridShape& shape);
// Rotation of the flattened pixel array: the grid is rotated by 90 degrees
// and the resulting height x width array is reinterpreted row-major as
// width x height. Coincides with a plain 90-degree rotation on square grids
// and remains a valid permutation on non-square ones.
Permutation rotation90_flat_permutation(const GridShape& shape);
Permutation color_permutation(const GridShape& shape,
                              std::span<const int> sigma);

// The analytically known generators of the world's expected concurrence-graph
// symmetry group (unit shifts, the rotation that is a pixel permutation, and
// color changes where applicable). Throws for Custom worlds.
std::vector<Permutation> reference_generators(const WorldSpec& spec);

// Closure order of reference_generators; the "expected graph symmetries"
// column of the worlds table (400 / 900 / 900 / 1092 / 1600).
std::uint64_t expected_group_order(const WorldSpec& spec);

// Applies a pixel permutation to an image: output bit perm[i] = input bit i.
BitImage apply_permutation(const Permutation& perm, const BitImage& image);

}  // namespace aga

#endif  // AGA_PERMUTATION_HPP
