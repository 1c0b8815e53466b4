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

#include "aga/permutation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "aga/random.hpp"

namespace aga {

namespace {

void check_bijection(const std::vector<std::int32_t>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    const std::int32_t t = image[i];
    if (t < 0 || t >= n || hit[t])
      throw std::invalid_argument("Permutation: image is not a bijection");
    hit[t] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<std::int32_t> image) : image_(std::move(image)) {
  check_bijection(image_);
}

Permutation Permutation::identity(int n) {
  std::vector<std::int32_t> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::int32_t> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = image_[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: length mismatch");
  std::vector<std::int32_t> image(p.size());
  for (int i = 0; i < p.size(); ++i) image[i] = p[q[i]];
  return Permutation(std::move(image));
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(p.size());
  for (auto v : p.image()) h = hash_combine(h, static_cast<std::uint64_t>(v));
  return static_cast<std::size_t>(h);
}

IncompletePermutation::IncompletePermutation(std::vector<std::int32_t> image)
    : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<bool> hit(n, false);
  for (auto t : image_) {
    if (t < -1 || t >= n)
      throw std::invalid_argument("IncompletePermutation: target out of range");
    if (t >= 0) {
      if (hit[t])
        throw std::invalid_argument("IncompletePermutation: not injective");
      hit[t] = true;
      ++mapped_;
    }
  }
}

IncompletePermutation IncompletePermutation::from_pairs(
    int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<std::int32_t> image(n, -1);
  for (auto [src, dst] : pairs) image.at(src) = dst;
  return IncompletePermutation(std::move(image));
}

Permutation IncompletePermutation::to_permutation() const {
  if (!is_total())
    throw std::logic_error("IncompletePermutation: not total");
  return Permutation(image_);
}

bool IncompletePermutation::agrees_with(const Permutation& p) const {
  if (p.size() != size()) return false;
  for (int i = 0; i < size(); ++i)
    if (image_[i] >= 0 && p[i] != image_[i]) return false;
  return true;
}

PermutationGroup PermutationGroup::close(std::vector<Permutation> generators,
                                         int n) {
  PermutationGroup group;
  if (n < 0) {
    if (generators.empty())
      throw std::invalid_argument("PermutationGroup::close: unknown degree");
    n = generators[0].size();
  }
  for (const auto& g : generators)
    if (g.size() != n)
      throw std::invalid_argument("PermutationGroup::close: degree mismatch");

  group.generators_ = generators;
  const Permutation id = Permutation::identity(n);
  group.index_.insert(id);
  group.elements_.push_back(id);
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : group.generators_) {
      Permutation next = compose(current, g);
      if (group.index_.insert(next).second) {
        group.elements_.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  return group;
}

std::optional<Permutation> PermutationGroup::find_matching(
    const IncompletePermutation& partial) const {
  for (const auto& element : elements_)
    if (partial.agrees_with(element)) return element;
  return std::nullopt;
}

Permutation translation_permutation(const GridShape& shape, int dx, int dy) {
  std::vector<std::int32_t> image(shape.node_count());
  for (int c = 0; c < shape.colors; ++c)
    for (int y = 0; y < shape.height; ++y)
      for (int x = 0; x < shape.width; ++x)
        image[shape.index(x, y, c)] = shape.index(x + dx, y + dy, c);
  return Permutation(std::move(image));
}

Permutation rotation180_permutation(const GridShape& shape) {
  std::vector<std::int32_t> image(shape.node_count());
  for (int c = 0; c < shape.colors; ++c)
    for (int y = 0; y < shape.height; ++y)
      for (int x = 0; x < shape.width; ++x)
        image[shape.index(x, y, c)] = shape.index(-x, -y, c);
  return Permutation(std::move(image));
}

Permutation rotation90_permutation(const GridShape& shape) {
  if (shape.width != shape.height)
    throw std::invalid_argument("rotation90_permutation: grid not square");
  std::vector<std::int32_t> image(shape.node_count());
  for (int c = 0; c < shape.colors; ++c)
    for (int y = 0; y < shape.height; ++y)
      for (int x = 0; x < shape.width; ++x)
        image[shape.index(x, y, c)] = shape.index(-y, x, c);
  return Permutation(std::move(image));
}

Permutation rotation90_flat_permutation(const GridShape& shape) {
  const int w = shape.width, h = shape.height, plane = w * h;
  std::vector<std::int32_t> image(shape.node_count());
  for (int c = 0; c < shape.colors; ++c)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        // Rotated array cell (row = w-1-x, col = y) of an h x w array,
        // reinterpreted row-major within the plane.
        const int flat = (w - 1 - x) * h + y;
        image[shape.index(x, y, c)] = c * plane + flat;
      }
  return Permutation(std::move(image));
}

Permutation color_permutation(const GridShape& shape, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != shape.colors)
    throw std::invalid_argument("color_permutation: sigma size mismatch");
  std::vector<std::int32_t> image(shape.node_count());
  for (int c = 0; c < shape.colors; ++c)
    for (int y = 0; y < shape.height; ++y)
      for (int x = 0; x < shape.width; ++x)
        image[shape.index(x, y, c)] = shape.index(x, y, sigma[c]);
  return Permutation(std::move(image));
}

std::vector<Permutation> reference_generators(const WorldSpec& spec) {
  const GridShape shape = spec.shape();
  std::vector<Permutation> gens;
  gens.push_back(translation_permutation(shape, 1, 0));
  gens.push_back(translation_permutation(shape, 0, 1));
  switch (spec.name) {
    case WorldName::T:
      gens.push_back(rotation180_permutation(shape));
      break;
    case WorldName::TR1:
    case WorldName::TR2:
    case WorldName::TL:
      gens.push_back(rotation90_permutation(shape));
      break;
    case WorldName::TC: {
      gens.push_back(rotation180_permutation(shape));
      const int cycle[3] = {1, 2, 0};
      const int swap[3] = {1, 0, 2};
      gens.push_back(color_permutation(shape, cycle));
      gens.push_back(color_permutation(shape, swap));
      break;
    }
    case WorldName::Custom:
      throw std::invalid_argument("reference_generators: unknown for Custom");
  }
  return gens;
}

std::uint64_t expected_group_order(const WorldSpec& spec) {
  return PermutationGroup::close(reference_generators(spec)).order();
}

BitImage apply_permutation(const Permutation& perm, const BitImage& image) {
  if (perm.size() != image.shape().node_count())
    throw std::invalid_argument("apply_permutation: size mismatch");
  BitImage out(image.shape());
  for (int i = 0; i < perm.size(); ++i)
    if (image.test_index(i)) out.set_index(perm[i]);
  return out;
}

}  // namespace aga
