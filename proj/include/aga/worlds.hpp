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

#ifndef AGA_WORLDS_HPP
#define AGA_WORLDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aga/bitimage.hpp"
#include "aga/glyphs.hpp"

namespace aga {

enum class WorldName { T, TR1, TR2, TC, TL, Custom };

std::string to_string(WorldName name);
std::optional<WorldName> world_name_from_string(const std::string& s);

enum class Transform : unsigned {
  GlobalTranslation = 1u << 0,
  Rotation90Steps = 1u << 1,
  ColorPermutation = 1u << 2,
  IndividualVerticalShift = 1u << 3,
};

class TransformSet {
 public:
  TransformSet() = default;
  TransformSet(std::initializer_list<Transform> ts) {
    for (auto t : ts) bits_ |= static_cast<unsigned>(t);
  }
  bool has(Transform t) const { return bits_ & static_cast<unsigned>(t); }
  bool operator==(const TransformSet&) const = default;

 private:
  unsigned bits_ = 0;
};

// A synthetic observation family: grid size, alphabet, letters per
// observation and the letter transformations used to generate the data.
struct WorldSpec {
  WorldName name = WorldName::Custom;
  int width = 0;
  int height = 0;
  std::vector<Glyph> alphabet;
  int letters_per_observation = 2;
  TransformSet transforms;
  int colors = 1;

  GridShape shape() const { return GridShape{width, height, colors}; }
  int node_count() const { return width * height * colors; }

  // The five named worlds with their fixed parameters:
  //   T    20x10, 26 letters, 2 per observation, translations
  //   TR1  15x15, 26 letters, 2, translations + 90-degree rotations
  //   TR2  15x15, 11 letters, 2, translations + 90-degree rotations
  //   TC   13x7,  11 letters x 3 colors, 2, translations + color changes
  //   TL   20x20, 26 letters, 3, translations + rotations + individual
  //        vertical letter shifts
  static WorldSpec named(WorldName name);
};

// Word placement: origin on the torus, rotation step r in {0..3}
// (counterclockwise about the grid origin), per-letter vertical offsets
// (individual-shift worlds only) and per-letter color assignment (colored
// worlds only; empty means the glyphs' own colors are used).
struct Placement {
  int x = 0;
  int y = 0;
  int rotation = 0;
  std::vector<int> offsets;
  std::vector<int> colors;
};

// Renders a word onto the torus. Glyphs are trimmed to their horizontal
// bounding box and laid out left to right with exactly one blank column
// between consecutive glyphs, each letter shifted by its individual offset
// perpendicular to the (pre-rotation) word axis; the whole word is then
// rotated by rotation*90 degrees about the grid origin, translated by
// (x, y) and wrapped.
BitImage render_word(const WorldSpec& spec, std::span<const Glyph> letters,
                     const Placement& placement);

// A deduplicated set of observations in canonical order (lexicographic on
// the flat bit arrays).
struct ObservationSet {
  WorldSpec spec;
  std::size_t words_per_image = 0;
  std::vector<std::uint64_t> data;

  std::size_t total() const {
    return words_per_image ? data.size() / words_per_image : 0;
  }
  std::span<const std::uint64_t> image(std::size_t i) const {
    return {data.data() + i * words_per_image, words_per_image};
  }
};

// All (letter tuple x placement) combinations, deduplicated and canonically
// ordered. Refuses TL, whose full enumeration is out of desk scale.
ObservationSet enumerate_observations(const WorldSpec& spec);

// Uniform without-replacement sample of floor(fraction * total) distinct
// observations, reproducible from the seed.
ObservationSet sample_observations(const WorldSpec& spec, double fraction,
                                   std::uint64_t seed);

// Sample a fixed number of distinct observations. For enumerable worlds this
// draws from the full enumeration; for TL observations are
// rejection-sampled from uniformly random (letters, placement) draws until
// `count` unique images have been collected.
ObservationSet sample_observations_count(const WorldSpec& spec,
                                         std::uint64_t count,
                                         std::uint64_t seed);

// The analytic number of letter transformations of the world (Table-style
// product of translation/rotation/color/shift choices).
std::uint64_t letter_transformation_count(const WorldSpec& spec);

// Plain-text export: a header line "aga-obs <width> <height> <colors>
// <total>" followed by one hex-encoded flat bit array per line.
void save_observations(const ObservationSet& obs, std::ostream& out);
ObservationSet load_observations(std::istream& in);
void save_observations_file(const ObservationSet& obs, const std::string& path);
ObservationSet load_observations_file(const std::string& path);

}  // namespace aga

#endif  // AGA_WORLDS_HPP
